#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ospl/padic.hpp"

namespace ospl {

// Exact element of (1/2)Z, stored as twice its value.
struct HalfInt {
    i64 twice = 0;

    static HalfInt of(i64 v) { return {2 * v}; }
    bool is_integer() const noexcept { return twice % 2 == 0; }
    // Throws std::domain_error for proper halves.
    i64 value() const;
    std::string str() const;

    friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

// Weight in the basis (delta_1..delta_n, eps_1..eps_m), stored in doubled coordinates.
class WeightVec {
public:
    WeightVec() = default;
    explicit WeightVec(std::size_t rank) : d_(rank, 0) {}

    static WeightVec from_doubled(std::vector<i64> doubled);
    static WeightVec integral(const std::vector<i64>& coords);
    static WeightVec unit(std::size_t rank, std::size_t index, i64 coeff = 1);

    std::size_t rank() const noexcept { return d_.size(); }
    const std::vector<i64>& doubled() const noexcept { return d_; }
    HalfInt operator[](std::size_t i) const { return {d_[i]}; }

    bool is_integral() const noexcept;
    bool is_zero() const noexcept;
    // Undoubled coordinates; throws std::domain_error unless integral.
    std::vector<i64> coords() const;
    std::string str() const;

    WeightVec& operator+=(const WeightVec& o);
    WeightVec& operator-=(const WeightVec& o);
    friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
    friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
    friend WeightVec operator-(WeightVec a);
    friend WeightVec operator*(i64 c, WeightVec a);
    // Halves every doubled coordinate; throws unless all are even.
    WeightVec halved() const;

    friend bool operator==(const WeightVec&, const WeightVec&) = default;
    friend auto operator<=>(const WeightVec& a, const WeightVec& b) { return a.d_ <=> b.d_; }

private:
    std::vector<i64> d_;
};

}  // namespace ospl
