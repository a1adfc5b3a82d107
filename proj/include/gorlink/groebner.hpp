#ifndef GORLINK_GROEBNER_HPP
#define GORLINK_GROEBNER_HPP

#include <vector>

#include "gorlink/modvec.hpp"

namespace gorlink {

/// A reduced Groebner basis of a submodule of a free module, together
/// with the order it was computed under. Basis elements are monic,
/// auto-reduced, and sorted ascending by lead term.
struct ModuleGB {
    ModuleOrder ord;
    std::vector<ModVec> basis;

    explicit ModuleGB(ModuleOrder o) : ord(std::move(o)) {}
};

/// Buchberger completion with the Gebauer-Moeller pair update and the
/// normal selection strategy. Deterministic for fixed input and order.
/// `comp_degree[c]` is the twist of basis vector e_c, used only to sort
/// the pair queue by true degree (pass {} for untwisted).
ModuleGB module_groebner(std::vector<ModVec> gens, const ModuleOrder& ord,
                         const std::vector<int>& comp_degree = {});

/// Full normal form (head and tail) against a basis.
ModVec module_normal_form(ModVec v, const ModuleGB& gb);

/// S-vector of two monic elements with the same lead component.
ModVec s_vector(const ModuleOrder& ord, const ModVec& a, const ModVec& b);

} // namespace gorlink

#endif
