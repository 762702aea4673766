#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace endgraph {

// Exact rational arithmetic for boundary ratios and thresholds.
// Kept deliberately small: all ratios in this project have tiny
// numerators/denominators (boundary sizes of desk-scale graphs).
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rat operator+(const Rat& o) const { return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rat operator-(const Rat& o) const { return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return Rat(num_ * o.den_, den_ * o.num_);
    }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rat& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return o <= *this; }

    // Canonical "p/q" form; integers print without the denominator.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double approx() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace endgraph
