#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chern/errors.hpp"
#include "chern/rational.hpp"

namespace chern {

namespace detail {

/// Uniform integer in [lo, hi], drawn from rng with rejection so the result
/// depends only on the (fully specified) mt19937_64 stream, not on any
/// library-defined distribution.
inline long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / range * range;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return lo + static_cast<long long>(r % range);
}

}  // namespace detail

/// Evaluation weights lambda_1..lambda_n.  Entries are exact rationals and
/// must be pairwise distinct, which keeps every difference in the formulas
/// invertible.
class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> values) : values_(std::move(values)) {
        if (values_.empty()) throw InvalidArgument("weight vector must be non-empty");
        for (std::size_t i = 0; i < values_.size(); ++i)
            for (std::size_t j = i + 1; j < values_.size(); ++j)
                if (values_[i] == values_[j])
                    throw DuplicateWeight("weights must be pairwise distinct; " +
                                          values_[i].str() + " repeats");
    }

    std::size_t size() const { return values_.size(); }
    const Rational& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i > 0) s += ", ";
            s += values_[i].str();
        }
        return s + ")";
    }

private:
    std::vector<Rational> values_;
};

inline std::ostream& operator<<(std::ostream& os, const WeightVector& w) {
    return os << w.str();
}

/// Draws n distinct integers uniformly from [-5n, 5n], retrying on
/// collisions.  Deterministic for a given rng state.
inline WeightVector sample_weights(std::size_t n, std::mt19937_64& rng) {
    if (n == 0) throw InvalidArgument("cannot sample an empty weight vector");
    long long bound = 5 * static_cast<long long>(n);
    std::vector<Rational> values;
    while (values.size() < n) {
        Rational candidate(static_cast<long>(detail::uniform_int(rng, -bound, bound)));
        bool seen = false;
        for (const Rational& v : values) seen = seen || v == candidate;
        if (!seen) values.push_back(candidate);
    }
    return WeightVector(std::move(values));
}

/// Size-k subset of {1..n}, stored strictly increasing.
class IndexSubset {
public:
    IndexSubset(std::vector<int> members, int ambient)
        : members_(std::move(members)), ambient_(ambient) {
        if (ambient_ < 1) throw InvalidArgument("ambient set size must be at least 1");
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (members_[i] < 1 || members_[i] > ambient_)
                throw IndexOutOfRange("subset member " + std::to_string(members_[i]) +
                                      " outside 1.." + std::to_string(ambient_));
            if (i > 0 && members_[i - 1] >= members_[i])
                throw InvalidArgument("subset members must be strictly increasing");
        }
    }

    int ambient() const { return ambient_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<int>& members() const { return members_; }

    /// The complement within {1..ambient}, increasing.
    std::vector<int> complement() const {
        std::vector<int> comp;
        comp.reserve(ambient_ - members_.size());
        std::size_t at = 0;
        for (int i = 1; i <= ambient_; ++i) {
            if (at < members_.size() && members_[at] == i) {
                ++at;
            } else {
                comp.push_back(i);
            }
        }
        return comp;
    }

    friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (i > 0) s += ",";
            s += std::to_string(members_[i]);
        }
        return s + "}";
    }

private:
    std::vector<int> members_;
    int ambient_;
};

inline std::ostream& operator<<(std::ostream& os, const IndexSubset& s) {
    return os << s.str();
}

/// All k-element subsets of {1..n} in colexicographic order ({1,2}, {1,3},
/// {2,3}, {1,4}, ...), the fixed deterministic enumeration used by every
/// subset sum in the library.
inline std::vector<IndexSubset> all_k_subsets(int n, int k) {
    if (n < 1) throw InvalidArgument("ambient set size must be at least 1");
    if (k < 0 || k > n)
        throw InvalidArgument("subset size " + std::to_string(k) + " outside 0.." +
                              std::to_string(n));
    std::vector<IndexSubset> subsets;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        subsets.push_back(IndexSubset(cur, n));
        // Colex successor: bump the lowest member with room above it and
        // reset everything below to 1,2,...
        int i = 0;
        for (; i < k; ++i) {
            int ceiling = (i + 1 < k) ? cur[i + 1] : n + 1;
            if (cur[i] + 1 < ceiling) break;
        }
        if (i == k) break;
        ++cur[i];
        for (int j = 0; j < i; ++j) cur[j] = j + 1;
    }
    return subsets;
}

}  // namespace chern
