#pragma once

#include <vector>

#include "vsb/svector.hpp"

namespace vsb {

// Weight b-module data on A ⊕ B. Only L(1)|_B is free: L(0) is forced by the
// grading (0 on A, 1 on B), L(1)|_A = 0, and L(-1) is induced by ∂ / the
// translation operator. l1[j] is the image in A of the j-th Γ basis element.
struct BModuleData {
    std::vector<SuperVector> l1;

    SuperVector l1_apply(const SuperVector& b) const {
        SuperVector out = l1.empty() ? SuperVector(0) : SuperVector(l1.front().space_id());
        for (const auto& [idx, c] : b.entries()) out.add_scaled(c, l1.at(static_cast<size_t>(idx)));
        return out;
    }
};

} // namespace vsb
