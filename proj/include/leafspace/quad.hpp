#ifndef LEAFSPACE_QUAD_HPP
#define LEAFSPACE_QUAD_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "leafspace/errors.hpp"

namespace leafspace {

using Rational = mpq_class;

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// d is a square-free positive integer shared by every scalar of a
/// computation; d = 1 degenerates to Q (the sqrt part is folded into the
/// rational part). Operations on scalars with different d throw
/// FieldMismatchError. Values are immutable after construction.
class QuadScalar {
  public:
    QuadScalar(Rational a, Rational b, long d);
    QuadScalar(long a, long d) : QuadScalar(Rational(a), Rational(0), d) {}

    static QuadScalar zero(long d) { return QuadScalar(0, d); }
    static QuadScalar one(long d) { return QuadScalar(1, d); }
    static QuadScalar sqrt_d(long d) { return QuadScalar(Rational(0), Rational(1), d); }
    static QuadScalar from_rational(Rational a, long d) {
        return QuadScalar(std::move(a), Rational(0), d);
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long discriminant() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    /// True iff the value lies in Z.
    bool is_integer() const;
    /// The integer value; only valid when is_integer().
    long to_integer() const;

    /// Exact sign of the real value: -1, 0 or +1.
    int sign() const;

    QuadScalar operator-() const;
    QuadScalar operator+(const QuadScalar& o) const;
    QuadScalar operator-(const QuadScalar& o) const;
    QuadScalar operator*(const QuadScalar& o) const;
    /// Exact field division; throws std::domain_error on zero divisor.
    QuadScalar operator/(const QuadScalar& o) const;

    QuadScalar& operator+=(const QuadScalar& o) { return *this = *this + o; }
    QuadScalar& operator-=(const QuadScalar& o) { return *this = *this - o; }
    QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }
    QuadScalar& operator/=(const QuadScalar& o) { return *this = *this / o; }

    bool operator==(const QuadScalar& o) const;
    bool operator!=(const QuadScalar& o) const { return !(*this == o); }
    /// Total order by real value, exact.
    bool operator<(const QuadScalar& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadScalar& o) const { return o < *this; }

    /// Canonical rendering: "0", "3/2", "√2", "2√2", "1+√2", "1-3/2√2".
    std::string str() const;

    /// Parses the grammar produced by str(); the radicand must equal d.
    static QuadScalar parse(const std::string& text, long d);

  private:
    Rational a_, b_;
    long d_;

    void check_same_field(const QuadScalar& o) const;
};

using QuadVector = std::vector<QuadScalar>;

QuadVector operator+(const QuadVector& x, const QuadVector& y);
QuadVector operator-(const QuadVector& x, const QuadVector& y);
QuadVector operator*(const QuadScalar& c, const QuadVector& x);
QuadScalar dot(const QuadVector& x, const QuadVector& y);
bool is_zero(const QuadVector& x);

std::string rational_str(const Rational& q);

}  // namespace leafspace

#endif
