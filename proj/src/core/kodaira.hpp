#ifndef EDSFN_CORE_KODAIRA_HPP
#define EDSFN_CORE_KODAIRA_HPP

#include <string>

namespace edsfn {

enum class Kodaira { Good, In, II, III, IV, InStar, IVStar, IIIStar, IIStar };

enum class GroupKind { Trivial, Cyclic, Klein };

/// Reduction type of a fibre. `n` is the index of I_n and I_n*, zero otherwise.
struct FibreType {
    Kodaira kind = Kodaira::Good;
    long n = 0;

    bool is_good() const noexcept { return kind == Kodaira::Good; }
    bool is_multiplicative() const noexcept { return kind == Kodaira::In && n > 0; }
    bool is_additive() const noexcept { return !is_good() && kind != Kodaira::In; }

    /// "I7", "I0*", "III", ...
    std::string name() const;
    /// Number of irreducible components m_v.
    long components() const;
    /// Euler number e(F_v) in residue characteristic other than 2, 3.
    long euler() const;
    /// Conductor exponent u_v in {0, 1, 2}.
    long conductor_exponent() const;

    GroupKind group_kind() const;
    long group_order() const;
    /// Exponent of the component group.
    long group_exponent() const;
    /// "trivial", "Z/7", "Z/2xZ/2", "Z/4", ...
    std::string group_name() const;

    friend bool operator==(const FibreType& a, const FibreType& b) { return a.kind == b.kind && a.n == b.n; }
};

/// Valuation standing in for ord(0).
inline constexpr long kInfiniteValuation = 1L << 40;

/// Type from the valuations of c4 and the discriminant of a minimal model,
/// residue characteristic 0 or at least 5. vC6 is accepted for symmetry with
/// the usual tables but the classification does not depend on it.
FibreType kodaira_type(long vC4, long vC6, long vDelta);

/// k * i in the component group of the given type.
long component_multiple(const FibreType& type, long i, long k);

/// True when `i` names an element of the component group.
bool valid_component(const FibreType& type, long i);

}  // namespace edsfn

#endif
