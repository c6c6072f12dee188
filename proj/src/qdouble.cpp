#include "tqi/qdouble.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "tqi/rng.hpp"

namespace tqi {

int FiniteGroup::inverse(int a) const {
    for (int b = 0; b < order; ++b)
        if (at(a, b) == identity) return b;
    throw std::invalid_argument("group element has no inverse");
}

void validate_group(const FiniteGroup& g) {
    const int n = g.order;
    if (n <= 0 || g.mul.size() != size_t(n) * size_t(n))
        throw std::invalid_argument("group table has the wrong size");
    if (g.identity < 0 || g.identity >= n)
        throw std::invalid_argument("group identity out of range");
    for (int v : g.mul)
        if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
    for (int a = 0; a < n; ++a)
        if (g.at(g.identity, a) != a || g.at(a, g.identity) != a)
            throw std::invalid_argument("group identity fails");
    for (int a = 0; a < n; ++a) g.inverse(a);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
                    throw std::invalid_argument("group table is not associative");
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group needs positive order");
    FiniteGroup g;
    g.name = "Z" + std::to_string(n);
    g.order = n;
    g.mul.resize(size_t(n) * size_t(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mul[size_t(a) * n + b] = (a + b) % n;
    return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.name = a.name + "x" + b.name;
    g.order = a.order * b.order;
    g.identity = a.identity * b.order + b.identity;
    g.mul.resize(size_t(g.order) * size_t(g.order));
    for (int p = 0; p < g.order; ++p)
        for (int q = 0; q < g.order; ++q) {
            int pa = p / b.order, pb = p % b.order;
            int qa = q / b.order, qb = q % b.order;
            g.mul[size_t(p) * g.order + q] = a.at(pa, qa) * b.order + b.at(pb, qb);
        }
    return g;
}

FiniteGroup symmetric3() {
    // Permutations of {0,1,2} listed in lexicographic one-line order.
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int* p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        throw std::logic_error("permutation lookup failed");
    };
    FiniteGroup g;
    g.name = "S3";
    g.order = 6;
    g.mul.resize(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int comp[3];
            for (int i = 0; i < 3; ++i) comp[i] = perms[a][perms[b][i]];
            g.mul[size_t(a) * 6 + b] = index_of(comp);
        }
    return g;
}

FiniteGroup dihedral4() {
    // Element r^a s^b encoded as 2a + b, with s r s = r^-1.
    FiniteGroup g;
    g.name = "D4";
    g.order = 8;
    g.mul.resize(64);
    for (int a1 = 0; a1 < 4; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    int a = ((b1 ? a1 - a2 : a1 + a2) % 4 + 4) % 4;
                    int b = b1 ^ b2;
                    g.mul[size_t(2 * a1 + b1) * 8 + (2 * a2 + b2)] = 2 * a + b;
                }
    return g;
}

FiniteGroup quaternion8() {
    // Element (-1)^s u encoded as 2u + s for units u in {1, i, j, k}.
    static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int unit_sign[4][4] = {{+1, +1, +1, +1},
                                        {+1, -1, +1, -1},
                                        {+1, -1, -1, +1},
                                        {+1, +1, -1, -1}};
    FiniteGroup g;
    g.name = "Q8";
    g.order = 8;
    g.mul.resize(64);
    for (int u1 = 0; u1 < 4; ++u1)
        for (int s1 = 0; s1 < 2; ++s1)
            for (int u2 = 0; u2 < 4; ++u2)
                for (int s2 = 0; s2 < 2; ++s2) {
                    int u = unit_prod[u1][u2];
                    int s = (s1 ^ s2) ^ (unit_sign[u1][u2] < 0 ? 1 : 0);
                    g.mul[size_t(2 * u1 + s1) * 8 + (2 * u2 + s2)] = 2 * u + s;
                }
    return g;
}

FiniteGroup group_by_name(const std::string& name) {
    std::string key;
    for (char c : name) key.push_back(char(std::tolower(static_cast<unsigned char>(c))));
    if (key == "z2") return cyclic_group(2);
    if (key == "z3") return cyclic_group(3);
    if (key == "z4") return cyclic_group(4);
    if (key == "z2xz2") return direct_product(cyclic_group(2), cyclic_group(2));
    if (key == "s3") return symmetric3();
    if (key == "d4") return dihedral4();
    if (key == "q8") return quaternion8();
    throw std::invalid_argument("unknown group: " + name);
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
    const int n = g.order;
    std::vector<int> cls_of(n, -1);
    std::vector<ConjugacyClass> classes;
    for (int a = 0; a < n; ++a) {
        if (cls_of[a] >= 0) continue;
        ConjugacyClass c;
        c.rep = a;
        for (int h = 0; h < n; ++h) {
            int conj = g.at(g.at(h, a), g.inverse(h));
            if (cls_of[conj] < 0) {
                cls_of[conj] = int(classes.size());
                c.elements.push_back(conj);
            }
        }
        std::sort(c.elements.begin(), c.elements.end());
        classes.push_back(std::move(c));
    }
    // Identity first, for the normalization conventions downstream.
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].rep == g.identity) {
            std::swap(classes[0], classes[i]);
            break;
        }
    return classes;
}

FiniteGroup centralizer_subgroup(const FiniteGroup& g, int element) {
    std::vector<int> members;
    std::vector<int> sub_index(g.order, -1);
    for (int h = 0; h < g.order; ++h)
        if (g.at(h, element) == g.at(element, h)) {
            sub_index[h] = int(members.size());
            members.push_back(h);
        }
    FiniteGroup z;
    z.name = g.name + ".centralizer";
    z.order = int(members.size());
    z.identity = sub_index[g.identity];
    z.mul.resize(size_t(z.order) * size_t(z.order));
    for (int a = 0; a < z.order; ++a)
        for (int b = 0; b < z.order; ++b) {
            int prod = sub_index[g.at(members[a], members[b])];
            if (prod < 0) throw std::logic_error("centralizer is not closed");
            z.mul[size_t(a) * z.order + b] = prod;
        }
    return z;
}

namespace {

// Class multiplication coefficients: the class sums form a commutative
// algebra, and the vectors of scaled characters are its joint eigenvectors;
// degrees follow from the orthogonality sum. A random combination of the
// class matrices separates the eigenvectors, and every candidate is
// verified against all class matrices before acceptance.
std::vector<int> irrep_dimensions_attempt(const FiniteGroup& g,
                                          const std::vector<ConjugacyClass>& classes,
                                          std::mt19937_64& rng) {
    const int r = int(classes.size());
    std::vector<int> cls_of(g.order, -1);
    for (int j = 0; j < r; ++j)
        for (int e : classes[j].elements) cls_of[e] = j;

    // coeff[j](i, k): number of ways an element of class j times an element
    // of class i lands on a fixed representative of class k.
    std::vector<Eigen::MatrixXd> coeff(r, Eigen::MatrixXd::Zero(r, r));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            int z = classes[k].rep;
            for (int x : classes[j].elements) {
                int y = g.at(g.inverse(x), z);
                coeff[j](cls_of[y], k) += 1.0;
            }
        }

    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(r, r);
    for (int j = 0; j < r; ++j) combo += gaussian(rng) * coeff[j];

    Eigen::EigenSolver<Eigen::MatrixXd> es(combo);
    if (es.info() != Eigen::Success) throw std::logic_error("class algebra eigensolve failed");

    std::vector<int> degrees;
    std::int64_t sum_sq = 0;
    for (int c = 0; c < r; ++c) {
        Eigen::VectorXcd v = es.eigenvectors().col(c);
        if (std::abs(v[0]) < 1e-9) throw std::logic_error("degenerate class eigenvector");
        v /= v[0];
        for (int j = 0; j < r; ++j) {
            double res = (coeff[j] * v - v[j] * v).norm();
            if (res > 1e-7 * (1.0 + std::abs(v[j]) * v.norm()))
                throw std::logic_error("class eigenvector fails cross verification");
        }
        double denom = 0.0;
        for (int k = 0; k < r; ++k) denom += std::norm(v[k]) / double(classes[k].elements.size());
        double d = std::sqrt(double(g.order) / denom);
        int di = int(std::lround(d));
        if (di < 1 || std::abs(d - di) > 1e-6)
            throw std::logic_error("irreducible degree is not an integer");
        degrees.push_back(di);
        sum_sq += std::int64_t(di) * di;
    }
    if (sum_sq != g.order) throw std::logic_error("degree sum rule fails");
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace

std::vector<int> irrep_dimensions(const FiniteGroup& g) {
    auto classes = conjugacy_classes(g);
    std::mt19937_64 rng(0x5eed5eedULL);
    for (int attempt = 0; attempt < 16; ++attempt) {
        try {
            return irrep_dimensions_attempt(g, classes, rng);
        } catch (const std::logic_error&) {
            // A colliding random combination is retried with fresh weights.
        }
    }
    throw std::logic_error("class algebra eigenvectors never separated");
}

AnyonTable double_model_anyons(const FiniteGroup& g) {
    auto classes = conjugacy_classes(g);
    AnyonTable table;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        auto degrees = irrep_dimensions(centralizer_subgroup(g, classes[ci].rep));
        for (int d : degrees) {
            Anyon a;
            a.class_index = int(ci);
            a.class_size = std::int64_t(classes[ci].elements.size());
            a.irrep_dim = d;
            a.quantum_dim = a.class_size * d;
            table.anyons.push_back(a);
            table.total_dim_sq += a.quantum_dim * a.quantum_dim;
        }
    }
    const std::int64_t order_sq = std::int64_t(g.order) * g.order;
    if (table.total_dim_sq != order_sq)
        throw std::logic_error("quantum dimensions do not square to the group order");
    table.invariant_bits = std::log2(double(table.total_dim_sq));
    for (const auto& a : table.anyons)
        table.probabilities.push_back(double(a.quantum_dim * a.quantum_dim) /
                                      double(table.total_dim_sq));
    return table;
}

std::string u128_str(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

u128 checked_pow(u128 base, int exp) {
    u128 out = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && out > (~u128(0)) / base) throw std::overflow_error("dimension overflow");
        out *= base;
    }
    return out;
}

u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > (~u128(0)) / a) throw std::overflow_error("dimension overflow");
    return a * b;
}

}  // namespace

ThinAnnulusDims thin_annulus_dims(const FiniteGroup& g, int n_inner, int n_outer) {
    if (n_inner < 1 || n_outer < 1)
        throw std::invalid_argument("thin annulus needs at least one site per boundary");
    auto table = double_model_anyons(g);
    ThinAnnulusDims dims;
    dims.total = checked_pow(u128(g.order), n_inner + n_outer);
    dims.vacuum = checked_pow(u128(g.order), n_inner + n_outer - 2);
    u128 sum = 0;
    for (const auto& a : table.anyons) {
        u128 s = checked_mul(dims.vacuum, u128(a.quantum_dim) * u128(a.quantum_dim));
        dims.sectors.push_back(s);
        sum += s;
    }
    if (sum != dims.total) throw std::logic_error("sector dimensions do not fill the annulus");
    return dims;
}

}  // namespace tqi
