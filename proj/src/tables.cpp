#include "ga/tables.hpp"

#include <stdexcept>

namespace ga::tables {

namespace {

// clang-format off
const std::array<std::array<const char*, 9>, 9> kReal{{
    {"R", "R+R", "R[2]", "C[2]", "H[2]", "H[2]+H[2]", "H[4]", "C[8]", "R[16]"},
    {"C", "R[2]", "R[2]+R[2]", "R[4]", "C[4]", "H[4]", "H[4]+H[4]", "H[8]", "C[16]"},
    {"H", "C[2]", "R[4]", "R[4]+R[4]", "R[8]", "C[8]", "H[8]", "H[8]+H[8]", "H[16]"},
    {"H+H", "H[2]", "C[4]", "R[8]", "R[8]+R[8]", "R[16]", "C[16]", "H[16]", "H[16]+H[16]"},
    {"H[2]", "H[2]+H[2]", "H[4]", "C[8]", "R[16]", "R[16]+R[16]", "R[32]", "C[32]", "H[32]"},
    {"C[4]", "H[4]", "H[4]+H[4]", "H[8]", "C[16]", "R[32]", "R[32]+R[32]", "R[64]", "C[64]"},
    {"R[8]", "C[8]", "H[8]", "H[8]+H[8]", "H[16]", "C[32]", "R[64]", "R[64]+R[64]", "R[128]"},
    {"R[8]+R[8]", "R[16]", "C[16]", "H[16]", "H[16]+H[16]", "H[32]", "C[64]", "R[128]", "R[128]+R[128]"},
    {"R[16]", "R[16]+R[16]", "R[32]", "C[32]", "H[32]", "H[32]+H[32]", "H[64]", "C[128]", "R[256]"},
}};

// n = 0..7: {inequivalent, dim} for R^{n,0} and R^{0,n}.
const std::array<RepresentationCounts, 8> kPositive{{{1, 1}, {2, 1}, {1, 2}, {1, 4}, {1, 8}, {2, 8}, {1, 16}, {1, 16}}};
const std::array<RepresentationCounts, 8> kNegative{{{1, 1}, {1, 2}, {1, 4}, {2, 4}, {1, 8}, {1, 8}, {1, 8}, {2, 8}}};
// clang-format on

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b) throw std::overflow_error("matrix size overflows 64 bits");
    return a * b;
}

}  // namespace

std::string AlgebraType::str() const {
    std::string one(1, field);
    if (size != 1) one += "[" + std::to_string(size) + "]";
    return doubled ? one + "+" + one : one;
}

AlgebraType parse_algebra(const std::string& text_in) {
    std::string text = text_in;
    for (std::string op : {"⊕", " + ", " ", "\t"}) {
        std::string rep = op == " " || op == "\t" ? "" : "+";
        for (std::size_t p; (p = text.find(op)) != std::string::npos;) text.replace(p, op.size(), rep);
    }
    auto single = [](const std::string& s) {
        if (s.empty() || (s[0] != 'R' && s[0] != 'C' && s[0] != 'H')) throw std::invalid_argument("bad algebra '" + s + "'");
        AlgebraType a;
        a.field = s[0];
        if (s.size() > 1) {
            if (s[1] != '[' || s.back() != ']') throw std::invalid_argument("bad algebra '" + s + "'");
            a.size = std::stoull(s.substr(2, s.size() - 3));
        }
        return a;
    };
    auto plus = text.find('+');
    if (plus == std::string::npos) return single(text);
    auto a = single(text.substr(0, plus)), b = single(text.substr(plus + 1));
    if (!(a == b)) throw std::invalid_argument("summands must agree");
    a.doubled = true;
    return a;
}

const std::array<std::array<const char*, 9>, 9>& real_table() { return kReal; }

AlgebraType classify_real(int s, int t) {
    if (s < 0 || t < 0) throw std::invalid_argument("signature counts must be non-negative");
    std::uint64_t scale = 1;
    while (s > 8) {
        s -= 8;
        scale = checked_mul(scale, 16);
    }
    while (t > 8) {
        t -= 8;
        scale = checked_mul(scale, 16);
    }
    auto a = parse_algebra(kReal[t][s]);
    a.size = checked_mul(a.size, scale);
    return a;
}

AlgebraType classify_complex(int n) {
    if (n < 0) throw std::invalid_argument("dimension must be non-negative");
    if (n / 2 >= 64) throw std::overflow_error("matrix size overflows 64 bits");
    return AlgebraType{'C', std::uint64_t(1) << (n / 2), n % 2 == 1};
}

std::vector<std::pair<int, int>> even_subalgebra_signatures(int s, int t) {
    if (s < 0 || t < 0) throw std::invalid_argument("signature counts must be non-negative");
    if (s == 0 && t == 0) throw std::invalid_argument("the scalars have no even-subalgebra reduction");
    std::vector<std::pair<int, int>> out;
    if (t >= 1) out.emplace_back(s, t - 1);
    if (s >= 1 && !(t >= 1 && t == s)) out.emplace_back(t, s - 1);
    return out;
}

RepresentationCounts definite_representation_counts(int n, bool negative) {
    if (n < 0) throw std::invalid_argument("dimension must be non-negative");
    auto base = (negative ? kNegative : kPositive)[n % 8];
    for (int k = 0; k < n / 8; ++k) base.dim = checked_mul(base.dim, 16);
    return base;
}

RepresentationCounts representation_counts(int s, int t) {
    auto a = classify_real(s, t);
    return RepresentationCounts{a.doubled ? 2 : 1, checked_mul(a.size, std::uint64_t(a.field_dim()))};
}

RepresentationCounts complex_representation_counts(int n) {
    auto a = classify_complex(n);
    return RepresentationCounts{a.doubled ? 2 : 1, a.size};
}

int radon_hurwitz(int N) {
    if (N < 0) throw std::invalid_argument("sphere dimension must be non-negative");
    unsigned long long m = (unsigned long long)N + 1;
    int c = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++c;
    }
    int a = c / 4, b = c % 4;
    return 8 * a + (1 << b) - 1;
}

}  // namespace ga::tables
