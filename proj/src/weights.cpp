#include "parhiggs/weights.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "parhiggs/errors.hpp"

namespace parhiggs {

namespace {

Rat frac_part(const Rat& x) { return x - Rat(rat_floor(x)); }

} // namespace

WeightSystem::WeightSystem(Kind kind, std::vector<std::array<Rat, 3>> w)
    : kind_(kind), w_(std::move(w)) {
    if (w_.empty()) throw ValidationError("weight system needs at least one point");
    for (size_t p = 0; p < w_.size(); ++p) {
        const auto& [a, b, c] = w_[p];
        for (const Rat& x : w_[p])
            if (x < 0 || x >= 1)
                throw ValidationError("weight out of range [0,1) at point " +
                                      std::to_string(p + 1));
        if (a == b || a == c || b == c)
            throw ValidationError("weights must be pairwise distinct at point " +
                                  std::to_string(p + 1));
        if (kind_ == Kind::LinePlusPair && !(b < c))
            throw ValidationError("rank-2 weights must satisfy beta1 < beta2 at point " +
                                  std::to_string(p + 1));
        if (kind_ == Kind::FullFlag && !(a < b && b < c))
            throw ValidationError("flag weights must be strictly increasing at point " +
                                  std::to_string(p + 1));
    }
}

WeightSystem WeightSystem::line_pair(std::vector<std::array<Rat, 3>> w) {
    return WeightSystem(Kind::LinePlusPair, std::move(w));
}

WeightSystem WeightSystem::full_flag(std::vector<std::array<Rat, 3>> w) {
    return WeightSystem(Kind::FullFlag, std::move(w));
}

static std::vector<std::array<Rat, 3>> default_table(long n) {
    if (n < 1) throw ValidationError("need at least one marked point");
    const Int K = Int(1000) * n * n;
    std::vector<std::array<Rat, 3>> w;
    for (long j = 1; j <= n; ++j)
        w.push_back({Rat(3 * j + 1, K), Rat(3 * j + 2, K), Rat(3 * j + 3, K)});
    return w;
}

WeightSystem WeightSystem::default_line_pair(long n) { return line_pair(default_table(n)); }

WeightSystem WeightSystem::default_full_flag(long n) { return full_flag(default_table(n)); }

const Rat& WeightSystem::alpha(long p) const {
    if (kind_ != Kind::LinePlusPair)
        throw ValidationError("alpha() requires a line-plus-pair weight system");
    return w_.at(static_cast<size_t>(p))[0];
}

const Rat& WeightSystem::beta1(long p) const {
    if (kind_ != Kind::LinePlusPair)
        throw ValidationError("beta1() requires a line-plus-pair weight system");
    return w_.at(static_cast<size_t>(p))[1];
}

const Rat& WeightSystem::beta2(long p) const {
    if (kind_ != Kind::LinePlusPair)
        throw ValidationError("beta2() requires a line-plus-pair weight system");
    return w_.at(static_cast<size_t>(p))[2];
}

const Rat& WeightSystem::flag(int i, long p) const {
    if (kind_ != Kind::FullFlag)
        throw ValidationError("flag() requires a full-flag weight system");
    if (i < 1 || i > 3) throw ValidationError("flag index must be 1, 2 or 3");
    return w_.at(static_cast<size_t>(p))[static_cast<size_t>(i - 1)];
}

bool WeightSystem::is_small() const {
    const Rat bound(1, 12 * points());
    for (const auto& point : w_)
        for (const Rat& x : point)
            if (!(x < bound)) return false;
    return true;
}

std::optional<std::vector<int>> WeightSystem::integer_relation(int max_coeff) const {
    if (max_coeff < 1) throw ValidationError("relation scan needs max_coeff >= 1");
    const long slots = 3 * points();
    if (slots > 12)
        throw ValidationError(
            "relation scan is exponential in the number of weights; refusing "
            "beyond 12 weight slots");
    std::vector<Rat> w;
    for (const auto& point : w_)
        for (const Rat& x : point) w.push_back(x);

    // Meet in the middle: enumerate fractional parts of partial sums of the
    // two halves; a relation exists iff fractional parts match with at
    // least one nonzero coefficient overall.
    const long half = slots / 2;
    auto enumerate = [&](long lo, long hi) {
        std::map<Rat, std::vector<int>> best; // fractional part -> one witness
        std::vector<int> coeffs(static_cast<size_t>(hi - lo), -max_coeff);
        while (true) {
            Rat sum = 0;
            for (long i = lo; i < hi; ++i) sum += w[static_cast<size_t>(i)] * coeffs[static_cast<size_t>(i - lo)];
            Rat key = frac_part(sum);
            bool nonzero = false;
            for (int c : coeffs)
                if (c != 0) nonzero = true;
            // Prefer keeping a nonzero witness for each key; also keep the
            // all-zero entry so pure relations in the other half are found.
            auto it = best.find(key);
            if (it == best.end() || (nonzero && !it->second.empty() &&
                                     std::all_of(it->second.begin(), it->second.end(),
                                                 [](int c) { return c == 0; })))
                best[key] = coeffs;
            // odometer
            size_t k = 0;
            for (; k < coeffs.size(); ++k) {
                if (coeffs[k] < max_coeff) {
                    ++coeffs[k];
                    break;
                }
                coeffs[k] = -max_coeff;
            }
            if (k == coeffs.size()) break;
        }
        return best;
    };

    auto left = enumerate(0, half);
    // Walk the right half and look for a complementary fractional part.
    std::vector<int> coeffs(static_cast<size_t>(slots - half), -max_coeff);
    while (true) {
        Rat sum = 0;
        for (long i = half; i < slots; ++i)
            sum += w[static_cast<size_t>(i)] * coeffs[static_cast<size_t>(i - half)];
        const Rat key = frac_part(-sum); // need left-frac == frac(-right sum)
        auto it = left.find(key);
        if (it != left.end()) {
            std::vector<int> full = it->second;
            full.insert(full.end(), coeffs.begin(), coeffs.end());
            bool nonzero = false;
            for (int c : full)
                if (c != 0) nonzero = true;
            if (nonzero) return full;
        }
        size_t k = 0;
        for (; k < coeffs.size(); ++k) {
            if (coeffs[k] < max_coeff) {
                ++coeffs[k];
                break;
            }
            coeffs[k] = -max_coeff;
        }
        if (k == coeffs.size()) break;
    }
    return std::nullopt;
}

} // namespace parhiggs
