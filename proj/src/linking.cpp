#include "torsionlink/linking.hpp"

#include "torsionlink/snf.hpp"

namespace torsionlink {

namespace {

// Inverse of a unimodular matrix, as integers.
IntMatrix int_inverse(const IntMatrix& m) {
    RatMatrix r = rat_inverse(m);
    IntMatrix z(r.rows(), r.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) {
            if (r(i, j).get_den() != 1) throw Error("internal: matrix is not unimodular");
            z(i, j) = r(i, j).get_num();
        }
    return z;
}

} // namespace

BigInt FiniteAbelianGroup::order() const {
    BigInt o = 1;
    for (const BigInt& d : invariant_factors) o *= d;
    return o;
}

HomologyPresentation homology(const Gluing& g) {
    HomologyPresentation hp;
    hp.presentation = g.block_b().transpose();
    SNFResult snf = smith_normal_form(hp.presentation);
    hp.generator_map = std::move(snf.U);
    for (std::size_t t = 0; t < g.genus(); ++t) {
        const BigInt& d = snf.D(t, t);
        if (d == 0)
            ++hp.free_rank;
        else if (d > 1)
            hp.group.invariant_factors.push_back(d);
    }
    return hp;
}

bool is_rational_homology_sphere(const Gluing& g) { return det(g.block_b()) != 0; }

RatMatrix linking_matrix(const Gluing& g) {
    IntMatrix b = g.block_b();
    if (det(b) == 0) throw NotRationalHomologySphere("det B = 0, not a rational homology sphere");
    RatMatrix lambda = rat_inverse(b) * RatMatrix(g.block_a());
    for (std::size_t i = 0; i < lambda.rows(); ++i)
        for (std::size_t j = 0; j < lambda.cols(); ++j) lambda(i, j) = -lambda(i, j);
    return lambda;
}

LinkingForm linking_form(const Gluing& g) {
    RatMatrix lambda = linking_matrix(g);
    // A B^T = B A^T forces this; a failure would mean a broken invariant.
    if (lambda != lambda.transpose()) throw Error("internal: -B^{-1}A is not symmetric");

    HomologyPresentation hp = homology(g);
    std::size_t n = g.genus();
    std::size_t k = hp.group.invariant_factors.size();
    // Diagonal layout of the SNF is 1s, then the invariant factors, then
    // zeros; the group's generators are the U^{-1} columns in the middle.
    std::size_t ones = n - hp.free_rank - k;
    IntMatrix uinv = int_inverse(hp.generator_map);

    LinkingForm f;
    f.group = std::move(hp.group);
    f.gram.assign(k, std::vector<QmodZ>(k));
    for (std::size_t jj = 0; jj < k; ++jj) {
        std::vector<Rational> w(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                w[i] += lambda(i, l) * Rational(uinv(l, ones + jj));
        for (std::size_t ii = 0; ii < k; ++ii) {
            Rational val;
            for (std::size_t l = 0; l < n; ++l) val += Rational(uinv(l, ones + ii)) * w[l];
            f.gram[ii][jj] = QmodZ(val);
        }
    }
    return f;
}

std::vector<BigInt> snf_coordinates(const HomologyPresentation& hp,
                                    const std::vector<BigInt>& x) {
    std::vector<BigInt> full = mat_apply(hp.generator_map, x);
    std::size_t k = hp.group.invariant_factors.size();
    std::size_t ones = full.size() - hp.free_rank - k;
    std::vector<BigInt> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        const BigInt& d = hp.group.invariant_factors[i];
        out[i] = full[ones + i] - d * floor_div(full[ones + i], d);
    }
    return out;
}

QmodZ evaluate(const LinkingForm& form, const std::vector<BigInt>& v,
               const std::vector<BigInt>& w) {
    std::size_t k = form.group.invariant_factors.size();
    if (v.size() != k || w.size() != k)
        throw DimensionMismatch("coefficient vectors must have length " + std::to_string(k));
    QmodZ acc;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) acc = acc + form.gram[i][j] * (v[i] * w[j]);
    return acc;
}

} // namespace torsionlink
