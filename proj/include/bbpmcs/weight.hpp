#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>

namespace bbpmcs {

// Value domain of the solver recursions and matching weights: a natural
// number extended with a bottom element that absorbs addition and loses
// every comparison. The bottom marks forbidden mappings; it is a tagged
// state, never a sentinel integer, so sums cannot overflow into garbage.
class Weight {
public:
    constexpr Weight() : finite_(true), value_(0) {}
    constexpr Weight(std::int64_t v) : finite_(true), value_(v) {}

    static constexpr Weight neg_inf() {
        Weight w;
        w.finite_ = false;
        w.value_ = 0;
        return w;
    }

    constexpr bool is_neg_inf() const { return !finite_; }
    constexpr std::int64_t value() const { return value_; }

    constexpr Weight operator+(Weight o) const {
        if (!finite_ || !o.finite_) return neg_inf();
        return Weight(value_ + o.value_);
    }
    Weight& operator+=(Weight o) { return *this = *this + o; }

    constexpr bool operator==(const Weight& o) const {
        return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
    }
    constexpr bool operator!=(const Weight& o) const { return !(*this == o); }
    constexpr bool operator<(const Weight& o) const {
        if (!finite_) return o.finite_;
        if (!o.finite_) return false;
        return value_ < o.value_;
    }
    constexpr bool operator<=(const Weight& o) const { return *this < o || *this == o; }
    constexpr bool operator>(const Weight& o) const { return o < *this; }
    constexpr bool operator>=(const Weight& o) const { return o <= *this; }

private:
    bool finite_;
    std::int64_t value_;
};

inline Weight max(Weight a, Weight b) { return a < b ? b : a; }

inline std::ostream& operator<<(std::ostream& os, Weight w) {
    if (w.is_neg_inf()) return os << "-inf";
    return os << w.value();
}

}  // namespace bbpmcs
