#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "chern/errors.hpp"

namespace chern {

/// Integer partition: weakly decreasing nonnegative parts.  Trailing zeros
/// are stripped on construction, so (2,1) and (2,1,0) compare equal.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<std::uint32_t> parts)
        : Partition(std::vector<std::uint32_t>(parts)) {}

    explicit Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i])
                throw InvalidArgument("partition parts must be weakly decreasing");
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    /// Nonzero parts, largest first.
    const std::vector<std::uint32_t>& parts() const { return parts_; }

    std::size_t length() const { return parts_.size(); }

    std::uint64_t weight() const {
        std::uint64_t w = 0;
        for (std::uint32_t p : parts_) w += p;
        return w;
    }

    bool fits_in_box(std::uint32_t rows, std::uint32_t cols) const {
        if (parts_.size() > rows) return false;
        return parts_.empty() || parts_.front() <= cols;
    }

    /// Complement inside a rows x cols box: reverse the parts (padded with
    /// zeros to the full row count) and subtract each from cols.
    Partition complement_in_box(std::uint32_t rows, std::uint32_t cols) const {
        if (!fits_in_box(rows, cols))
            throw InvalidArgument("partition does not fit in the " + std::to_string(rows) +
                                  "x" + std::to_string(cols) + " box");
        std::vector<std::uint32_t> padded(parts_);
        padded.resize(rows, 0);
        std::vector<std::uint32_t> comp(rows);
        for (std::uint32_t i = 0; i < rows; ++i) comp[i] = cols - padded[rows - 1 - i];
        return Partition(std::move(comp));
    }

    friend bool operator==(const Partition&, const Partition&) = default;

    /// "[2,1]"; the empty partition renders as "[]".
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

private:
    std::vector<std::uint32_t> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

}  // namespace chern
