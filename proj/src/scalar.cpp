#include "ga/matrix.hpp"
#include "ga/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace ga {

mpq_class parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw std::invalid_argument("empty number");
    bool neg = false;
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        pos = 1;
    }
    std::string body = text.substr(pos);
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string::npos) {
        std::string ex = body.substr(e + 1);
        std::size_t k = (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) ? 1 : 0;
        if (ex.size() == k || ex.size() > k + 6 ||
            !std::all_of(ex.begin() + k, ex.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("bad exponent: " + raw);
        exponent = std::stol(ex);
        body = body.substr(0, e);
    }
    auto digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    mpq_class q;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string p = body.substr(0, slash), d = body.substr(slash + 1);
        if (!digits(p) || !digits(d)) throw std::invalid_argument("bad rational: " + raw);
        mpz_class den(d, 10);
        if (den == 0) throw std::invalid_argument("zero denominator: " + raw);
        q = mpq_class(mpz_class(p, 10), den);
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!digits(ip) || !digits(fp)) throw std::invalid_argument("bad decimal: " + raw);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        q = mpq_class(mpz_class(ip + fp, 10), scale);
    } else {
        if (!digits(body)) throw std::invalid_argument("bad integer: " + raw);
        q = mpq_class(mpz_class(body, 10));
    }
    if (exponent != 0) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, (unsigned long)std::labs(exponent));
        if (exponent > 0) q *= scale;
        else q /= scale;
    }
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

Matrix<mpq_class> parse_matrix(const std::string& text) {
    std::vector<std::vector<mpq_class>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        std::string row = text.substr(start, end - start);
        std::vector<mpq_class> vals;
        std::size_t s = 0;
        while (s <= row.size()) {
            std::size_t e = row.find(',', s);
            if (e == std::string::npos) e = row.size();
            vals.push_back(parse_rational(row.substr(s, e - s)));
            s = e + 1;
        }
        rows.push_back(vals);
        start = end + 1;
    }
    return Matrix<mpq_class>::from_rows(rows);
}

}  // namespace ga
