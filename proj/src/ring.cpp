#include "segrelab/ring.hpp"

#include "segrelab/poly.hpp"

namespace segrelab {

int Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<int> Ring::coordinate_vars() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < roles.size(); ++i)
        if (roles[i] == VarRole::Coordinate) out.push_back(static_cast<int>(i));
    return out;
}

Ring Ring::polynomial(Field f, std::vector<std::string> names) {
    Ring R;
    R.field = f;
    R.roles.assign(names.size(), VarRole::Coordinate);
    R.var_deg.assign(names.size(), {1});
    R.num_blocks = 1;
    R.vars = std::move(names);
    return R;
}

Ring Ring::with_modulus(std::vector<Poly> gens) const {
    Ring R = *this;
    R.modulus = std::move(gens);
    R.modulus_gb.reset();
    return R;
}

Ring Ring::extended(const std::vector<std::string>& names, VarRole role) const {
    Ring R;
    R.field = field;
    R.vars = vars;
    R.roles = roles;
    R.var_deg = var_deg;
    R.num_blocks = num_blocks;
    for (const auto& n : names) {
        R.vars.push_back(n);
        R.roles.push_back(role);
        R.var_deg.emplace_back(num_blocks, 0);
    }
    for (const Poly& g : modulus) R.modulus.push_back(p_lift(R, g));
    return R;
}

std::string Ring::signature() const {
    std::string s = field.to_string() + "[";
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ",";
        s += vars[i];
        s += roles[i] == VarRole::Coordinate ? "" : (roles[i] == VarRole::Parameter ? "!p" : "!a");
        s += "(";
        for (std::int32_t b = 0; b < num_blocks; ++b) {
            if (b) s += ",";
            s += std::to_string(var_deg[i][b]);
        }
        s += ")";
    }
    s += "]";
    if (!modulus.empty()) {
        s += "/(";
        for (std::size_t i = 0; i < modulus.size(); ++i) {
            if (i) s += ",";
            s += p_to_string(*this, modulus[i]);
        }
        s += ")";
    }
    return s;
}

}  // namespace segrelab
