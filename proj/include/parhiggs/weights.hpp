#pragma once

#include <array>
#include <optional>
#include <vector>

#include "parhiggs/rational.hpp"

namespace parhiggs {

/// Parabolic weight systems over n marked points, in two flavors:
///   - LinePlusPair: each point carries a line weight alpha and an ordered
///     rank-2 pair beta1 < beta2 (the shape used by triples of a rank-2 and
///     a rank-1 bundle);
///   - FullFlag: each point carries a full flag alpha1 < alpha2 < alpha3
///     (the shape used by rank-3 moduli).
///
/// All weights are exact rationals in [0, 1) and are pairwise distinct at
/// each point. Distinctness is what the chamber computations genuinely
/// require; a stronger "no bounded integer combination sums to an integer"
/// condition is available as a diagnostic (integer_relation) but is not an
/// invariant, since natural small-weight families violate it while leaving
/// every computation in this library exact and well-defined. The operative
/// genericity checks (distinct critical values when presenting chambers,
/// evaluation parameters avoiding walls) happen exactly where they matter,
/// in the wall-enumeration code.
class WeightSystem {
public:
    enum class Kind { LinePlusPair, FullFlag };

    /// Per-point triples (alpha, beta1, beta2) with beta1 < beta2.
    static WeightSystem line_pair(std::vector<std::array<Rat, 3>> w);
    /// Per-point flags (alpha1, alpha2, alpha3), strictly increasing.
    static WeightSystem full_flag(std::vector<std::array<Rat, 3>> w);

    /// Default small generic-enough weights: weight i at point j is
    /// (3j + i) / K with K = 1000 * n * n (i = 1..3, j = 1..n). Small in
    /// the sense of is_small() for every n >= 1.
    static WeightSystem default_line_pair(long n);
    static WeightSystem default_full_flag(long n);

    Kind kind() const { return kind_; }
    long points() const { return static_cast<long>(w_.size()); }

    // LinePlusPair accessors.
    const Rat& alpha(long p) const;
    const Rat& beta1(long p) const;
    const Rat& beta2(long p) const;

    /// FullFlag accessor, i in {1, 2, 3}, p in {0, .., n-1}.
    const Rat& flag(int i, long p) const;

    const std::array<Rat, 3>& at(long p) const { return w_.at(static_cast<size_t>(p)); }

    /// Every weight strictly below 1 / (12 n). Small weights make all the
    /// closed-form bookkeeping collapse to its combinatorial normal form.
    bool is_small() const;

    /// Exhaustive search for a nonzero integer coefficient vector
    /// (|coefficient| <= max_coeff per weight) whose weighted sum is an
    /// integer. Returns the coefficients (3 per point, point-major) when
    /// one exists. Diagnostic only; exact over the rationals. Feasible for
    /// desk-scale inputs (meet-in-the-middle over 3n slots).
    std::optional<std::vector<int>> integer_relation(int max_coeff) const;

private:
    WeightSystem(Kind kind, std::vector<std::array<Rat, 3>> w);
    Kind kind_;
    std::vector<std::array<Rat, 3>> w_;
};

} // namespace parhiggs
