#pragma once

#include <vector>

#include "mdim/errors.hpp"
#include "mdim/rational.hpp"

namespace mdim {

// A map vertex -> Rational with every entry in [0, 1] (a resolving function
// candidate). The range invariant is enforced at every mutation.
class Weighting {
  public:
    Weighting() = default;
    explicit Weighting(std::vector<Rational> w) : w_(std::move(w)) {
        for (const auto& q : w_) validate(q);
    }

    static Weighting zero(int n) { return Weighting(std::vector<Rational>(n, Rational(0))); }
    static Weighting uniform(int n, const Rational& q) {
        return Weighting(std::vector<Rational>(n, q));
    }

    int size() const { return static_cast<int>(w_.size()); }
    const Rational& at(int v) const { return w_.at(v); }
    void set(int v, const Rational& q) {
        validate(q);
        w_.at(v) = q;
    }

    Rational total() const {
        Rational s(0);
        for (const auto& q : w_) s += q;
        return s;
    }

    const std::vector<Rational>& values() const { return w_; }

  private:
    static void validate(const Rational& q) {
        if (q < Rational(0) || q > Rational(1))
            throw WeightOutOfRangeError("weight " + q.str() + " outside [0,1]");
    }

    std::vector<Rational> w_;
};

}  // namespace mdim
