#include "leafspace/random.hpp"

#include "leafspace/modes.hpp"

namespace leafspace {

long RandomSource::uniform(long lo, long hi) {
    if (hi < lo)
        throw std::invalid_argument("empty range");
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Rational RandomSource::rational(long max_abs_num, long max_den) {
    Rational q(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
    q.canonicalize();
    return q;
}

QuadScalar RandomSource::quad(long d) {
    return QuadScalar(rational(), d == 1 ? Rational(0) : rational(), d);
}

QuadScalar RandomSource::quad_nonzero(long d) {
    for (;;) {
        QuadScalar x = quad(d);
        if (!x.is_zero())
            return x;
    }
}

QuadVector RandomSource::quad_vector(int dim, long d) {
    QuadVector v;
    v.reserve(dim);
    for (int i = 0; i < dim; ++i)
        v.push_back(quad(d));
    return v;
}

Frequency RandomSource::integer_frequency(int dim, long d, int box) {
    QuadVector entries;
    entries.reserve(dim);
    for (int i = 0; i < dim; ++i)
        entries.push_back(QuadScalar(uniform(-box, box), d));
    return Frequency{std::move(entries)}.canonical().first;
}

TrigScalar RandomSource::trig_polynomial(int dim, long d, int max_terms, int box) {
    TrigScalar f(dim, d);
    const long terms = uniform(0, max_terms);
    for (long t = 0; t < terms; ++t) {
        const Frequency k = integer_frequency(dim, d, box);
        f = f + TrigScalar::wave(k, quad(d), quad(d));
    }
    return f;
}

DiffForm RandomSource::form(int dim, int degree, long d, int max_terms, int box) {
    DiffForm x(dim, degree, d);
    const auto indices = multi_indices(dim, degree);
    if (indices.empty())
        return x;
    for (const MultiIndex& idx : indices) {
        if (uniform(0, 1) == 0)
            continue;
        x = x + DiffForm::monomial(trig_polynomial(dim, d, max_terms, box), idx);
    }
    return x;
}

DiffForm RandomSource::basic_form(const LinearFoliation& foliation, int degree, int box) {
    const int n = foliation.torus_dim();
    const long d = foliation.discriminant();
    DiffForm x(n, degree, d);
    for (const Frequency& k : enumerate_modes(n, d, box)) {
        for (const DiffForm& b : basic_mode_space(foliation, k, degree)) {
            if (uniform(0, 2) != 0)
                continue;
            x = x + b * quad(d);
        }
    }
    return x;
}

QuadVector RandomSource::leaf_vector(const LinearFoliation& foliation) {
    QuadVector w(foliation.torus_dim(), QuadScalar::zero(foliation.discriminant()));
    for (const QuadVector& v : foliation.tangents()) {
        const QuadScalar c = quad(foliation.discriminant());
        for (size_t i = 0; i < w.size(); ++i)
            w[i] += c * v[i];
    }
    return w;
}

AffineMap RandomSource::affine_plot(int source_dim, int torus_dim, long d) {
    QuadMatrix m = zero_matrix(torus_dim, source_dim, d);
    for (int i = 0; i < torus_dim; ++i)
        for (int j = 0; j < source_dim; ++j)
            m[i][j] = QuadScalar(uniform(-2, 2), d);
    QuadVector phase(torus_dim, QuadScalar::zero(d));
    for (int i = 0; i < torus_dim; ++i)
        phase[i] = QuadScalar(uniform(-4, 4), d);
    return AffineMap(source_dim, torus_dim, std::move(m), std::move(phase));
}

}  // namespace leafspace
