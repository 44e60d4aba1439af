#include "leafspace/trig.hpp"

#include <sstream>

namespace leafspace {

bool Frequency::is_zero() const {
    return leafspace::is_zero(entries);
}

bool Frequency::is_integer() const {
    for (const auto& e : entries)
        if (!e.is_integer())
            return false;
    return true;
}

bool Frequency::is_canonical() const {
    for (const auto& e : entries) {
        const int s = e.sign();
        if (s != 0)
            return s > 0;
    }
    return true;  // zero mode
}

std::pair<Frequency, bool> Frequency::canonical() const {
    if (is_canonical())
        return {*this, false};
    QuadVector flipped;
    flipped.reserve(entries.size());
    for (const auto& e : entries)
        flipped.push_back(-e);
    return {Frequency{std::move(flipped)}, true};
}

int Frequency::compare(const Frequency& o) const {
    if (entries.size() != o.entries.size())
        throw DimensionError("frequency length mismatch");
    for (size_t i = 0; i < entries.size(); ++i) {
        const int s = (entries[i] - o.entries[i]).sign();
        if (s != 0)
            return s;
    }
    return 0;
}

std::string Frequency::str(const std::vector<std::string>& names) const {
    std::string out;
    for (size_t i = 0; i < entries.size(); ++i) {
        const QuadScalar& e = entries[i];
        if (e.is_zero())
            continue;
        std::string coeff = e.str();
        if (coeff == "1")
            coeff = "";
        else if (coeff == "-1")
            coeff = "-";
        else if (coeff.find('+') != std::string::npos || coeff.find('-', 1) != std::string::npos)
            coeff = "(" + coeff + ")";
        if (!out.empty() && (coeff.empty() || coeff[0] != '-'))
            out += "+";
        out += coeff + names.at(i);
    }
    return out.empty() ? "0" : out;
}

TrigScalar::TrigScalar(int dim, long d) : dim_(dim), d_(d) {
    if (dim < 0)
        throw DimensionError("negative domain dimension");
}

TrigScalar TrigScalar::constant(QuadScalar value, int dim) {
    TrigScalar r(dim, value.discriminant());
    Frequency zero{QuadVector(dim, QuadScalar::zero(value.discriminant()))};
    r.add_term(zero, value, QuadScalar::zero(value.discriminant()));
    return r;
}

TrigScalar TrigScalar::wave(const Frequency& k, QuadScalar cos_coeff, QuadScalar sin_coeff) {
    TrigScalar r(static_cast<int>(k.size()), cos_coeff.discriminant());
    r.add_term(k, cos_coeff, sin_coeff);
    return r;
}

TrigScalar TrigScalar::coord_cos(int j, int dim, long d) {
    QuadVector k(dim, QuadScalar::zero(d));
    k.at(j) = QuadScalar::one(d);
    return wave(Frequency{k}, QuadScalar::one(d), QuadScalar::zero(d));
}

TrigScalar TrigScalar::coord_sin(int j, int dim, long d) {
    QuadVector k(dim, QuadScalar::zero(d));
    k.at(j) = QuadScalar::one(d);
    return wave(Frequency{k}, QuadScalar::zero(d), QuadScalar::one(d));
}

bool TrigScalar::is_constant() const {
    if (terms_.empty())
        return true;
    return terms_.size() == 1 && terms_.begin()->first.is_zero();
}

QuadScalar TrigScalar::constant_part() const {
    for (const auto& [k, t] : terms_)
        if (k.is_zero())
            return t.cos_coeff;
    return QuadScalar::zero(d_);
}

void TrigScalar::check_compatible(const TrigScalar& o) const {
    if (dim_ != o.dim_)
        throw DimensionError("trig polynomials on domains of different dimension: " +
                             std::to_string(dim_) + " vs " + std::to_string(o.dim_));
    if (d_ != o.d_)
        throw FieldMismatchError("trig polynomials over different fields");
}

void TrigScalar::add_term(const Frequency& k, const QuadScalar& c, const QuadScalar& s) {
    if (static_cast<int>(k.size()) != dim_)
        throw DimensionError("frequency length does not match domain dimension");
    auto [canon, flipped] = k.canonical();
    QuadScalar cc = c;
    QuadScalar ss = flipped ? -s : s;  // cos is even, sin is odd
    if (canon.is_zero())
        ss = QuadScalar::zero(d_);  // sin 0 = 0
    auto it = terms_.find(canon);
    if (it == terms_.end()) {
        if (!cc.is_zero() || !ss.is_zero())
            terms_.emplace(std::move(canon), Term{std::move(cc), std::move(ss)});
        return;
    }
    it->second.cos_coeff += cc;
    it->second.sin_coeff += ss;
    if (it->second.cos_coeff.is_zero() && it->second.sin_coeff.is_zero())
        terms_.erase(it);
}

TrigScalar TrigScalar::operator-() const {
    TrigScalar r(dim_, d_);
    for (const auto& [k, t] : terms_)
        r.terms_.emplace(k, Term{-t.cos_coeff, -t.sin_coeff});
    return r;
}

TrigScalar TrigScalar::operator+(const TrigScalar& o) const {
    check_compatible(o);
    TrigScalar r = *this;
    for (const auto& [k, t] : o.terms_)
        r.add_term(k, t.cos_coeff, t.sin_coeff);
    return r;
}

TrigScalar TrigScalar::operator-(const TrigScalar& o) const {
    check_compatible(o);
    TrigScalar r = *this;
    for (const auto& [k, t] : o.terms_)
        r.add_term(k, -t.cos_coeff, -t.sin_coeff);
    return r;
}

TrigScalar TrigScalar::operator*(const TrigScalar& o) const {
    check_compatible(o);
    TrigScalar r(dim_, d_);
    const QuadScalar half = QuadScalar(Rational(1, 2), Rational(0), d_);
    for (const auto& [ka, ta] : terms_) {
        for (const auto& [kb, tb] : o.terms_) {
            // Product-to-sum on (c1 cos A + s1 sin A)(c2 cos B + s2 sin B):
            //   cos(A+B): (c1c2 - s1s2)/2     sin(A+B): (c1s2 + s1c2)/2
            //   cos(A-B): (c1c2 + s1s2)/2     sin(A-B): (s1c2 - c1s2)/2
            const QuadScalar cc = ta.cos_coeff * tb.cos_coeff;
            const QuadScalar ss = ta.sin_coeff * tb.sin_coeff;
            const QuadScalar cs = ta.cos_coeff * tb.sin_coeff;
            const QuadScalar sc = ta.sin_coeff * tb.cos_coeff;
            Frequency sum{ka.entries + kb.entries};
            Frequency diff{ka.entries - kb.entries};
            r.add_term(sum, (cc - ss) * half, (cs + sc) * half);
            r.add_term(diff, (cc + ss) * half, (sc - cs) * half);
        }
    }
    return r;
}

TrigScalar TrigScalar::operator*(const QuadScalar& c) const {
    TrigScalar r(dim_, d_);
    if (c.is_zero())
        return r;
    for (const auto& [k, t] : terms_)
        r.add_term(k, t.cos_coeff * c, t.sin_coeff * c);
    return r;
}

bool TrigScalar::operator==(const TrigScalar& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

TrigScalar TrigScalar::partial(int j) const {
    if (j < 0 || j >= dim_)
        throw DimensionError("partial derivative index out of range");
    TrigScalar r(dim_, d_);
    for (const auto& [k, t] : terms_) {
        const QuadScalar& kj = k.entries[j];
        if (kj.is_zero())
            continue;
        // d/dx_j cos(k·x) = -k_j sin(k·x),  d/dx_j sin(k·x) = k_j cos(k·x)
        r.add_term(k, kj * t.sin_coeff, -(kj * t.cos_coeff));
    }
    return r;
}

bool TrigScalar::independent_of(int j) const {
    for (const auto& [k, t] : terms_)
        if (!k.entries.at(j).is_zero())
            return false;
    return true;
}

TrigScalar TrigScalar::substitute_affine(const std::vector<QuadVector>& matrix_rows,
                                         const QuadVector& phase_half_pi) const {
    if (static_cast<int>(matrix_rows.size()) != dim_ || phase_half_pi.size() != matrix_rows.size())
        throw DimensionError("affine substitution shape does not match trig polynomial");
    const int source_dim = matrix_rows.empty() ? 0 : static_cast<int>(matrix_rows[0].size());
    TrigScalar r(source_dim, d_);
    for (const auto& [k, t] : terms_) {
        // New frequency M^T k and phase k·c (in units of pi/2).
        QuadVector freq(source_dim, QuadScalar::zero(d_));
        QuadScalar phase = QuadScalar::zero(d_);
        for (int i = 0; i < dim_; ++i) {
            const QuadScalar& ki = k.entries[i];
            phase += ki * phase_half_pi[i];
            if (ki.is_zero())
                continue;
            for (int j = 0; j < source_dim; ++j)
                freq[j] += ki * matrix_rows[i][j];
        }
        if (!phase.is_integer())
            throw PhaseError("phase not exactly representable: (" + phase.str() + ")·π/2");
        long quarter = ((phase.to_integer() % 4) + 4) % 4;
        // cos(u + q·π/2), sin(u + q·π/2) written back on the (cos u, sin u) basis.
        QuadScalar c = t.cos_coeff, s = t.sin_coeff;
        QuadScalar new_c = QuadScalar::zero(d_), new_s = QuadScalar::zero(d_);
        switch (quarter) {
            case 0: new_c = c;  new_s = s;  break;
            case 1: new_c = s;  new_s = -c; break;
            case 2: new_c = -c; new_s = -s; break;
            case 3: new_c = -s; new_s = c;  break;
        }
        r.add_term(Frequency{std::move(freq)}, new_c, new_s);
    }
    return r;
}

std::vector<std::string> coord_names(int dim, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(dim);
    for (int i = 1; i <= dim; ++i)
        names.push_back(prefix + std::to_string(i));
    return names;
}

std::string TrigScalar::str(const std::vector<std::string>& names) const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const QuadScalar& coeff, const std::string& factor) {
        if (coeff.is_zero())
            return;
        std::string cs = coeff.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative)
            cs = cs.substr(1);
        out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        const bool needs_parens = cs.find('+') != std::string::npos ||
                                  cs.find('-') != std::string::npos;
        if (factor.empty())
            out << (needs_parens ? "(" + cs + ")" : cs);
        else if (cs == "1")
            out << factor;
        else
            out << (needs_parens ? "(" + cs + ")" : cs) << "·" << factor;
    };
    for (const auto& [k, t] : terms_) {
        if (k.is_zero()) {
            emit(t.cos_coeff, "");
            continue;
        }
        const std::string arg = k.str(names);
        emit(t.cos_coeff, "cos(" + arg + ")");
        emit(t.sin_coeff, "sin(" + arg + ")");
    }
    return out.str();
}

}  // namespace leafspace
