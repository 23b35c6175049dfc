#pragma once

#include <cstddef>
#include <vector>

#include "grouptrace/field.hpp"

namespace grouptrace {

/// Dense rank-3 array of scalars over one field, flat row-major storage.
class Tensor3 {
public:
    Tensor3(Field f, std::size_t n0, std::size_t n1, std::size_t n2)
        : field_(f), n0_(n0), n1_(n1), n2_(n2),
          a_(n0 * n1 * n2, Scalar::zero(f)) {}

    const Field& field() const { return field_; }
    std::size_t n0() const { return n0_; }
    std::size_t n1() const { return n1_; }
    std::size_t n2() const { return n2_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return a_[(i * n1_ + j) * n2_ + k];
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return a_[(i * n1_ + j) * n2_ + k];
    }

    bool operator==(const Tensor3& o) const {
        return n0_ == o.n0_ && n1_ == o.n1_ && n2_ == o.n2_ && field_ == o.field_ &&
               a_ == o.a_;
    }

private:
    Field field_;
    std::size_t n0_, n1_, n2_;
    std::vector<Scalar> a_;
};

} // namespace grouptrace
