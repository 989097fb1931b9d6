#include "ospl/weight.hpp"

#include <stdexcept>

namespace ospl {

i64 HalfInt::value() const {
    if (!is_integer()) throw std::domain_error("half-integer has no integer value: " + str());
    return twice / 2;
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

WeightVec WeightVec::from_doubled(std::vector<i64> doubled) {
    WeightVec w;
    w.d_ = std::move(doubled);
    return w;
}

WeightVec WeightVec::integral(const std::vector<i64>& coords) {
    WeightVec w(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) w.d_[i] = 2 * coords[i];
    return w;
}

WeightVec WeightVec::unit(std::size_t rank, std::size_t index, i64 coeff) {
    WeightVec w(rank);
    w.d_.at(index) = 2 * coeff;
    return w;
}

bool WeightVec::is_integral() const noexcept {
    for (i64 x : d_)
        if (x % 2 != 0) return false;
    return true;
}

bool WeightVec::is_zero() const noexcept {
    for (i64 x : d_)
        if (x != 0) return false;
    return true;
}

std::vector<i64> WeightVec::coords() const {
    if (!is_integral()) throw std::domain_error("weight is not integral: " + str());
    std::vector<i64> c(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) c[i] = d_[i] / 2;
    return c;
}

std::string WeightVec::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < d_.size(); ++i) {
        if (i) s += ", ";
        s += HalfInt{d_[i]}.str();
    }
    return s + ")";
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
    if (o.rank() != rank()) throw std::invalid_argument("rank mismatch");
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
    return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
    if (o.rank() != rank()) throw std::invalid_argument("rank mismatch");
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
    return *this;
}

WeightVec operator-(WeightVec a) {
    for (i64& x : a.d_) x = -x;
    return a;
}

WeightVec operator*(i64 c, WeightVec a) {
    for (i64& x : a.d_) x *= c;
    return a;
}

WeightVec WeightVec::halved() const {
    WeightVec w(*this);
    for (i64& x : w.d_) {
        if (x % 2 != 0) throw std::domain_error("cannot halve " + str());
        x /= 2;
    }
    return w;
}

}  // namespace ospl
