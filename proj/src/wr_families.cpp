#include "wrlat/wr_families.hpp"

#include <string>

namespace wrlat {

namespace {

FamilyFilters filters_for(std::int64_t t, std::int64_t D)
{
    return {is_prime(t + 2), is_squarefree(D < 0 ? -D : D)};
}

}  // namespace

FamilyInstance imaginary_instance(std::int64_t t)
{
    if (t < 1 || t % 2 == 0) throw InvalidInput("imaginary family needs odd t >= 1, got " + std::to_string(t));
    const std::int64_t D = -(t + 2) * (3 * t + 2);
    const std::int64_t a = t + 1;
    IdealTriple triple{a, (t - 1) / 2, 1, QuadOrder(D)};
    BinaryForm form{Rational(a * a), Rational(a * (a - 1)), Rational(a * a)};
    return {FamilyKind::Imaginary, t, D, triple, form, filters_for(t, D)};
}

FamilyInstance real_instance(std::int64_t t)
{
    if (t < 5 || t % 2 == 0) throw InvalidInput("real family needs odd t >= 5, got " + std::to_string(t));
    const std::int64_t D = (t + 2) * (t - 2);
    IdealTriple triple{t + 2, (t + 1) / 2, 1, QuadOrder(D)};
    BinaryForm form{Rational(t * (t + 2)), Rational(4 * (t + 2)), Rational(t * (t + 2))};
    return {FamilyKind::Real, t, D, triple, form, filters_for(t, D)};
}

FamilyInstance family_instance(FamilyKind kind, std::int64_t t)
{
    return kind == FamilyKind::Imaginary ? imaginary_instance(t) : real_instance(t);
}

Mat2 family_basis_change(FamilyKind kind)
{
    if (kind == FamilyKind::Imaginary) return Mat2::identity();
    return {{1, 0, -1, 1}};
}

bool closed_form_matches(const FamilyInstance& inst)
{
    return transform(form_from_ideal(inst.triple), family_basis_change(inst.kind)) == inst.closed_form;
}

std::vector<FamilyInstance> family_stream(FamilyKind kind, std::int64_t t_max, bool require_squarefree,
                                          bool require_prime)
{
    std::vector<FamilyInstance> out;
    const std::int64_t t0 = kind == FamilyKind::Imaginary ? 1 : 5;
    for (std::int64_t t = t0; t <= t_max; t += 2) {
        FamilyInstance inst = family_instance(kind, t);
        if (require_squarefree && !inst.filters.squarefree) continue;
        if (require_prime && !inst.filters.p_prime) continue;
        out.push_back(std::move(inst));
    }
    return out;
}

}  // namespace wrlat
