#include "braid/state.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace braid {

std::size_t power_dim(std::size_t D, std::size_t n) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (dim > std::numeric_limits<std::size_t>::max() / D)
            throw ShapeError("power_dim: D^n overflows");
        dim *= D;
    }
    return dim;
}

std::vector<int> QuditRegisterState::digits_of(std::size_t index) const {
    std::vector<int> digits(n, 0);
    for (std::size_t j = n; j-- > 0;) {
        digits[j] = static_cast<int>(index % D);
        index /= D;
    }
    return digits;
}

std::size_t QuditRegisterState::index_of(const std::vector<int>& digits) const {
    if (digits.size() != n) throw ShapeError("index_of: wrong digit count");
    std::size_t index = 0;
    for (int s : digits) {
        if (s < 0 || static_cast<std::size_t>(s) >= D)
            throw LevelError("index_of: digit out of range");
        index = index * D + static_cast<std::size_t>(s);
    }
    return index;
}

QuditRegisterState zero_state(std::size_t D, std::size_t n) {
    if (D < 2) throw LevelError("zero_state: D must be at least 2");
    if (n < 1) throw LevelError("zero_state: n must be at least 1");
    QuditRegisterState s;
    s.D = D;
    s.n = n;
    s.amplitudes.assign(power_dim(D, n), cplx{0.0, 0.0});
    return s;
}

QuditRegisterState basis_state(std::size_t D, std::size_t n, const std::vector<int>& digits) {
    QuditRegisterState s = zero_state(D, n);
    if (digits.size() != n) throw LevelError("basis_state: expected n digits");
    s.amplitudes[s.index_of(digits)] = cplx{1.0, 0.0};
    return s;
}

cplx overlap(const QuditRegisterState& s1, const QuditRegisterState& s2) {
    if (s1.D != s2.D || s1.n != s2.n) throw ShapeError("overlap: register shapes differ");
    return inner(s1.amplitudes, s2.amplitudes);
}

namespace {

// Reshape the amplitudes into a D^|A| x D^|B| matrix for the given cut.
Eigen::MatrixXcd bipartition_matrix(const QuditRegisterState& state,
                                    const std::vector<int>& positions) {
    const std::size_t n = state.n;
    std::vector<bool> in_a(n, false);
    for (int p : positions) {
        if (p < 1 || static_cast<std::size_t>(p) > n)
            throw PartitionError("bipartition: position out of range");
        if (in_a[static_cast<std::size_t>(p - 1)])
            throw PartitionError("bipartition: duplicate position");
        in_a[static_cast<std::size_t>(p - 1)] = true;
    }
    const std::size_t na = positions.size();
    if (na == 0 || na == n) throw PartitionError("bipartition: cut must be proper and nonempty");

    const std::size_t ra = power_dim(state.D, na);
    const std::size_t rb = power_dim(state.D, n - na);
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(ra), static_cast<Eigen::Index>(rb));
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        const std::vector<int> digits = state.digits_of(idx);
        std::size_t ia = 0, ib = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (in_a[j])
                ia = ia * state.D + static_cast<std::size_t>(digits[j]);
            else
                ib = ib * state.D + static_cast<std::size_t>(digits[j]);
        }
        m(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ib)) = state.amplitudes[idx];
    }
    return m;
}

} // namespace

std::vector<double> schmidt_coefficients(const QuditRegisterState& state,
                                         const std::vector<int>& positions) {
    const Eigen::MatrixXcd m = bipartition_matrix(state, positions);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    std::vector<double> out(sv.data(), sv.data() + sv.size());
    return out;
}

double entanglement_entropy(const QuditRegisterState& state, const std::vector<int>& positions) {
    const std::vector<double> sv = schmidt_coefficients(state, positions);
    double entropy = 0.0;
    for (double s : sv) {
        const double p = s * s;
        if (p <= 1e-14) continue; // numerically zero Schmidt weight
        entropy -= p * std::log2(p);
    }
    return entropy;
}

} // namespace braid
