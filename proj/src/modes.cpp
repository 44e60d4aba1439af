#include "leafspace/modes.hpp"

namespace leafspace {

std::vector<MultiIndex> multi_indices(int n, int r) {
    std::vector<MultiIndex> out;
    if (r < 0 || r > n)
        return out;
    MultiIndex current;
    // Depth-first lexicographic enumeration of r-subsets of {0..n-1}.
    auto recurse = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == r) {
            out.push_back(current);
            return;
        }
        const int remaining = r - static_cast<int>(current.size());
        for (int i = next; i <= n - remaining; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

std::vector<Frequency> enumerate_modes(int torus_dim, long d, int box) {
    if (box < 0)
        throw std::invalid_argument("truncation box must be nonnegative");
    std::vector<Frequency> modes;
    std::vector<long> k(torus_dim, -box);
    for (;;) {
        bool canonical = true;
        for (long e : k) {
            if (e == 0)
                continue;
            canonical = e > 0;
            break;
        }
        if (canonical) {
            QuadVector entries;
            entries.reserve(torus_dim);
            for (long e : k)
                entries.push_back(QuadScalar(e, d));
            modes.push_back(Frequency{std::move(entries)});
        }
        int pos = torus_dim - 1;
        while (pos >= 0 && k[pos] == box)
            k[pos--] = -box;
        if (pos < 0)
            break;
        ++k[pos];
    }
    return modes;
}

ModeCoordinates::ModeCoordinates(int n, long d, const Frequency& mode, int degree)
    : n_(n), d_(d), mode_(mode.canonical().first), degree_(degree),
      zero_mode_(mode_.is_zero()), indices_(multi_indices(n, degree)) {
    if (static_cast<int>(mode_.size()) != n)
        throw DimensionError("mode length must equal ambient dimension");
}

QuadVector ModeCoordinates::coordinates(const DiffForm& x) const {
    if (x.dim() != n_ || x.degree() != degree_)
        throw DimensionError("form does not match mode coordinate system");
    QuadVector coords(dim(), QuadScalar::zero(d_));
    for (const auto& [idx, f] : x.terms()) {
        size_t pos = 0;
        while (pos < indices_.size() && indices_[pos] != idx)
            ++pos;
        if (pos == indices_.size())
            throw std::logic_error("multi-index outside coordinate system");
        for (const auto& [k, t] : f.terms()) {
            if (k != mode_)
                throw std::logic_error("form has a frequency outside this mode");
            if (zero_mode_) {
                coords[pos] = t.cos_coeff;
            } else {
                coords[2 * pos] = t.cos_coeff;
                coords[2 * pos + 1] = t.sin_coeff;
            }
        }
    }
    return coords;
}

DiffForm ModeCoordinates::form(const QuadVector& coords) const {
    if (coords.size() != dim())
        throw DimensionError("coordinate vector length mismatch");
    DiffForm x(n_, degree_, d_);
    for (size_t pos = 0; pos < indices_.size(); ++pos) {
        TrigScalar coeff =
            zero_mode_
                ? TrigScalar::constant(coords[pos], n_)
                : TrigScalar::wave(mode_, coords[2 * pos], coords[2 * pos + 1]);
        x = x + DiffForm::monomial(coeff, indices_[pos]);
    }
    return x;
}

DiffForm ModeCoordinates::unit(size_t i) const {
    QuadVector coords(dim(), QuadScalar::zero(d_));
    coords.at(i) = QuadScalar::one(d_);
    return form(coords);
}

}  // namespace leafspace
