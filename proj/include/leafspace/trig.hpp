#ifndef LEAFSPACE_TRIG_HPP
#define LEAFSPACE_TRIG_HPP

#include <map>
#include <string>
#include <vector>

#include "leafspace/quad.hpp"

namespace leafspace {

/// Fourier mode index: a vector of Q(sqrt(d)) entries, one per ambient
/// coordinate. Integer-valued when the ambient space is a torus; pullback
/// along skew affine maps produces irrational entries.
///
/// Canonical sign: the first nonzero entry is positive (exact order on
/// Q(sqrt(d))); the zero vector is the unique constant mode.
struct Frequency {
    QuadVector entries;

    size_t size() const { return entries.size(); }
    bool is_zero() const;
    bool is_integer() const;
    /// True iff already in canonical sign.
    bool is_canonical() const;
    /// Canonical representative and whether a flip was applied.
    std::pair<Frequency, bool> canonical() const;

    bool operator==(const Frequency& o) const { return compare(o) == 0; }
    bool operator!=(const Frequency& o) const { return compare(o) != 0; }
    bool operator<(const Frequency& o) const { return compare(o) < 0; }

    int compare(const Frequency& o) const;  // lexicographic, exact
    std::string str(const std::vector<std::string>& coord_names) const;
};

/// Finite trigonometric polynomial
///     sum_k  c_k cos(k·x) + s_k sin(k·x)
/// with QuadScalar coefficients; the concrete model of a smooth function on
/// a torus or plot domain. Stored in normal form: frequencies canonical,
/// no all-zero coefficient pairs, sin coefficient of the zero mode absent.
/// Immutable value semantics; equality of normal forms is equality of
/// functions.
class TrigScalar {
  public:
    struct Term {
        QuadScalar cos_coeff;
        QuadScalar sin_coeff;
        bool operator==(const Term& o) const {
            return cos_coeff == o.cos_coeff && sin_coeff == o.sin_coeff;
        }
    };
    using TermMap = std::map<Frequency, Term>;

    /// The zero function on a dim-dimensional domain.
    TrigScalar(int dim, long d);

    static TrigScalar constant(QuadScalar value, int dim);
    /// c*cos(k·x) + s*sin(k·x); k is canonicalized.
    static TrigScalar wave(const Frequency& k, QuadScalar cos_coeff, QuadScalar sin_coeff);
    /// cos(x_j) or sin(x_j) on a dim-dimensional domain.
    static TrigScalar coord_cos(int j, int dim, long d);
    static TrigScalar coord_sin(int j, int dim, long d);

    int dim() const { return dim_; }
    long discriminant() const { return d_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of the constant mode (zero when absent).
    QuadScalar constant_part() const;

    TrigScalar operator-() const;
    TrigScalar operator+(const TrigScalar& o) const;
    TrigScalar operator-(const TrigScalar& o) const;
    TrigScalar operator*(const TrigScalar& o) const;
    TrigScalar operator*(const QuadScalar& c) const;

    bool operator==(const TrigScalar& o) const;
    bool operator!=(const TrigScalar& o) const { return !(*this == o); }

    /// Exact partial derivative with respect to coordinate j.
    TrigScalar partial(int j) const;

    /// Substitution x = M t + (pi/2) c: the result is a function of t with
    /// frequencies M^T k. Every phase k·c must be an integer (units of
    /// pi/2); otherwise PhaseError.
    TrigScalar substitute_affine(const std::vector<QuadVector>& matrix_rows,
                                 const QuadVector& phase_half_pi) const;

    /// True iff no term's frequency has a nonzero entry at coordinate j.
    bool independent_of(int j) const;

    std::string str(const std::vector<std::string>& coord_names) const;

  private:
    int dim_;
    long d_;
    TermMap terms_;

    void add_term(const Frequency& k, const QuadScalar& c, const QuadScalar& s);
    void check_compatible(const TrigScalar& o) const;
};

/// Default coordinate names t1..tn (or the given prefix).
std::vector<std::string> coord_names(int dim, const std::string& prefix = "t");

}  // namespace leafspace

#endif
