#pragma once

#include <cstdint>
#include <vector>

#include "wrlat/planar_lattice.hpp"

namespace wrlat {

enum class FamilyKind { Imaginary, Real };

struct FamilyFilters {
    bool p_prime;     // t + 2 is prime
    bool squarefree;  // |D| is squarefree
};

/// One member of the two WR ideal families, parametrised by odd t.
///
/// Imaginary: D = -(t+2)(3t+2), ideal <t+1, (t-1)/2 + delta>, form a^2, a(a-1), a^2.
/// Real (t >= 5): D = (t+2)(t-2), ideal <t+2, (t+1)/2 + delta>, form t(t+2), 4(t+2), t(t+2)
/// in the basis {a - (b + delta), b + delta}.
struct FamilyInstance {
    FamilyKind kind;
    std::int64_t t;
    std::int64_t D;  // signed radicand
    IdealTriple triple;
    BinaryForm closed_form;
    FamilyFilters filters;
};

/// Throws InvalidInput for even or non-positive t.
FamilyInstance imaginary_instance(std::int64_t t);
/// Throws InvalidInput for even t or t < 5.
FamilyInstance real_instance(std::int64_t t);
FamilyInstance family_instance(FamilyKind kind, std::int64_t t);

/// Basis change taking the canonical ideal basis to the basis of the closed form.
Mat2 family_basis_change(FamilyKind kind);

/// True iff transform(form_from_ideal(triple), family_basis_change(kind)) == closed_form.
bool closed_form_matches(const FamilyInstance& inst);

/// All instances with t <= t_max in increasing t; optionally only squarefree D.
std::vector<FamilyInstance> family_stream(FamilyKind kind, std::int64_t t_max, bool require_squarefree,
                                          bool require_prime = false);

}  // namespace wrlat
