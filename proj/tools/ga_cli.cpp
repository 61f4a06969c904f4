// Command-line front end: expression evaluation and the discrete/table/group tools.
#include "ga/discrete.hpp"
#include "ga/expr.hpp"
#include "ga/format.hpp"
#include "ga/groups.hpp"
#include "ga/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ga;
using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class T>
json terms_json(const Multivector<T>& x) {
    json arr = json::array();
    for (const auto& [m, v] : ordered_terms(x)) {
        json idx = json::array();
        for (int i : mask_indices(m)) idx.push_back(i + 1);
        arr.push_back({{"mask", idx}, {"coeff", to_str(v)}});
    }
    return arr;
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json) std::cout << j.dump(2) << "\n";
    else std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

std::string zgroup(long rank, const std::vector<mpz_class>& torsion) {
    std::string out;
    if (rank == 1) out = "Z";
    else if (rank > 1) out = "Z^" + std::to_string(rank);
    for (const auto& t : torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
    return out.empty() ? "0" : out;
}

// "s,t,base,N,double"; the complex form puts C(n) in the first two fields.
std::string algebra_line(const std::string& prefix, int s, int t, const tables::AlgebraType& a) {
    std::string head = prefix.empty() ? std::to_string(s) + "," + std::to_string(t) : prefix + "," + std::to_string(s);
    return head + "," + std::string(1, a.field) + "," + std::to_string(a.size) + "," + (a.doubled ? "1" : "0");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric algebra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format; 'line' gives s,t,base,N,double rows for classify and tables")
        ->check(CLI::IsMember({"text", "json", "line"}));

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate an expression");
    std::string sig_text, expr_text;
    bool use_float = false;
    eval->add_option("--sig", sig_text, "Signature, e.g. R(3,0,0) or sig[+,-,0]")->required();
    eval->add_option("expr", expr_text, "Expression")->required();
    eval->add_flag("--float", use_float, "Evaluate in floating point");

    // classify
    auto* classify = app.add_subcommand("classify", "Identify G(R^{s,t}) as a matrix algebra");
    int cs = -1, ct = -1, cn = -1;
    classify->add_option("s", cs, "Positive generators");
    classify->add_option("t", ct, "Negative generators");
    classify->add_option("--complex", cn, "Classify the complex algebra of dimension n instead");

    // tables
    auto* tables = app.add_subcommand("tables", "Print classification tables");
    bool reps = false;
    int rh = -1;
    tables->add_flag("--reps", reps, "Irreducible representation counts for definite signatures");
    tables->add_option("--radon-hurwitz", rh, "Radon-Hurwitz number for the sphere S^N");

    // factor-orthogonal
    auto* factor = app.add_subcommand("factor-orthogonal", "Write an orthogonal map as a product of reflections");
    std::string matrix_text;
    factor->add_option("--sig", sig_text, "Signature")->required();
    factor->add_option("--matrix", matrix_text, "Rows separated by ';', entries by ','")->required();

    // split-bivector
    auto* split = app.add_subcommand("split-bivector", "Decompose a bivector into commuting 2-blades");
    bool orthonormal = false;
    split->add_option("--sig", sig_text, "Signature")->required();
    split->add_option("expr", expr_text, "Bivector expression")->required();
    split->add_flag("--orthonormal", orthonormal, "Require metric-orthogonal, non-null factors");

    // homology
    auto* hom = app.add_subcommand("homology", "Simplicial homology over Z");
    std::string path1, path2;
    bool reduced = false;
    hom->add_option("file", path1, "Complex file")->required();
    hom->add_flag("--reduced", reduced, "Include the empty simplex");

    // spanning-trees
    auto* trees = app.add_subcommand("spanning-trees", "Count spanning trees");
    bool brute = false;
    trees->add_option("file", path1, "Graph file")->required();
    trees->add_flag("--brute-force", brute, "Also enumerate edge subsets");

    // sperner
    auto* sperner = app.add_subcommand("sperner", "Index and complete triangles of a Sperner labeling");
    sperner->add_option("cplx", path1, "Triangles, positively oriented")->required();
    sperner->add_option("labels", path2, "Vertex labels with a corners header")->required();

    // octonion
    auto* oct = app.add_subcommand("octonion", "Octonion product inside G(R^{0,7})");
    std::string oa, ob;
    oct->add_option("a", oa, "Left factor")->required();
    oct->add_option("b", ob, "Right factor")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    const bool as_json = format == "json";
    const bool as_line = format == "line";

    try {
        if (*eval) {
            auto values = expr::parse_signature(sig_text);
            auto e = expr::parse(expr_text, int(values.size()));
            json j{{"signature", values}};
            std::string text;
            if (use_float || expr::uses_exp(e)) {
                auto x = expr::evaluate<double>(e, expr::make_signature<double>(values));
                j["ring"] = "float";
                j["terms"] = terms_json(x);
                text = to_string(x);
            } else {
                auto x = expr::evaluate<mpq_class>(e, expr::make_signature<mpq_class>(values));
                j["ring"] = "rational";
                j["terms"] = terms_json(x);
                text = to_string(x);
            }
            j["text"] = text;
            emit(as_json, j, text);
        } else if (*classify) {
            if (cn >= 0) {
                auto a = tables::classify_complex(cn);
                if (as_line) {
                    std::cout << algebra_line("C", cn, -1, a) << "\n";
                    return 0;
                }
                emit(as_json, {{"complex", cn}, {"algebra", a.str()}}, "C(" + std::to_string(cn) + ") = " + a.str());
            } else {
                if (cs < 0 || ct < 0) throw UsageError("classify needs s and t, or --complex n");
                auto a = tables::classify_real(cs, ct);
                auto r = tables::representation_counts(cs, ct);
                if (as_line) {
                    std::cout << algebra_line("", cs, ct, a) << "\n";
                    return 0;
                }
                json j{{"s", cs}, {"t", ct}, {"algebra", a.str()}, {"irreducible_representations", r.inequivalent},
                       {"representation_dim", r.dim}};
                emit(as_json, j, "R(" + std::to_string(cs) + "," + std::to_string(ct) + ") = " + a.str());
            }
        } else if (*tables) {
            if (rh >= 0) {
                int n = tables::radon_hurwitz(rh);
                emit(as_json, {{"N", rh}, {"vector_fields", n}}, std::to_string(n));
            } else if (reps) {
                std::ostringstream out;
                json rows = json::array();
                out << "n\tR(n,0)\tnu\td\tR(0,n)\tnu\td\n";
                for (int n = 0; n <= 8; ++n) {
                    auto p = tables::definite_representation_counts(n, false);
                    auto q = tables::definite_representation_counts(n, true);
                    auto pa = tables::classify_real(n, 0), qa = tables::classify_real(0, n);
                    out << n << "\t" << pa.str() << "\t" << p.inequivalent << "\t" << p.dim << "\t" << qa.str() << "\t"
                        << q.inequivalent << "\t" << q.dim << "\n";
                    rows.push_back({{"n", n}, {"positive", {{"algebra", pa.str()}, {"nu", p.inequivalent}, {"d", p.dim}}},
                                    {"negative", {{"algebra", qa.str()}, {"nu", q.inequivalent}, {"d", q.dim}}}});
                }
                emit(as_json, rows, out.str());
            } else if (as_line) {
                for (int t = 0; t <= 8; ++t)
                    for (int s = 0; s <= 8; ++s) std::cout << algebra_line("", s, t, tables::classify_real(s, t)) << "\n";
            } else {
                std::ostringstream out;
                json rows = json::array();
                out << "t\\s";
                for (int s = 0; s <= 8; ++s) out << "\t" << s;
                out << "\n";
                for (int t = 0; t <= 8; ++t) {
                    out << t;
                    json row = json::array();
                    for (int s = 0; s <= 8; ++s) {
                        auto a = tables::classify_real(s, t).str();
                        out << "\t" << a;
                        row.push_back(a);
                    }
                    out << "\n";
                    rows.push_back(row);
                }
                emit(as_json, rows, out.str());
            }
        } else if (*factor) {
            auto values = expr::parse_signature(sig_text);
            Matrix<mpq_class> m;
            try {
                m = parse_matrix(matrix_text);
            } catch (const std::invalid_argument& e) {
                throw expr::ParseError(e.what());
            }
            auto sig = expr::make_signature<mpq_class>(values);
            Outermorphism<mpq_class> f(sig, m);
            auto us = cartan_dieudonne(f);
            bool ok = reflections_matrix(sig, us) == m;
            std::ostringstream out;
            json vs = json::array();
            for (const auto& u : us) {
                out << to_string(u) << "\n";
                vs.push_back(terms_json(u));
            }
            out << "reflections: " << us.size() << "\n";
            out << "recomposition: " << (ok ? "exact match" : "MISMATCH") << "\n";
            emit(as_json, {{"reflections", vs}, {"count", us.size()}, {"verified", ok}}, out.str());
            if (!ok) return 1;
        } else if (*split) {
            auto values = expr::parse_signature(sig_text);
            auto sig = expr::make_signature<double>(values);
            auto B = expr::evaluate<double>(expr::parse(expr_text, int(values.size())), sig);
            if (B.homogeneous_grade() != 2 && !B.is_zero()) throw std::invalid_argument("input is not a bivector");
            auto planes = orthonormal ? split_bivector_orthonormal(B) : split_bivector_general(B);
            std::ostringstream out;
            json arr = json::array();
            for (const auto& p : planes) {
                out << to_string(p.blade) << "\n";
                arr.push_back(terms_json(p.blade));
            }
            emit(as_json, {{"blades", arr}}, out.str());
        } else if (*hom) {
            std::size_t added = 0;
            auto K = discrete::parse_complex(read_file(path1), &added);
            if (added > 0) std::cerr << "warning: added " << added << " missing faces to close the complex\n";
            auto h = discrete::homology(K, reduced);
            std::ostringstream out;
            json arr = json::array();
            for (std::size_t i = 0; i < h.betti.size(); ++i) {
                int d = int(i) + h.min_degree;
                out << "H" << d << " = " << zgroup(h.betti[i], h.torsion[i]) << "\n";
                json tor = json::array();
                for (const auto& t : h.torsion[i]) tor.push_back(t.get_str());
                arr.push_back({{"degree", d}, {"betti", h.betti[i]}, {"torsion", tor}});
            }
            emit(as_json, {{"reduced", reduced}, {"groups", arr}}, out.str());
        } else if (*trees) {
            auto G = discrete::parse_graph(read_file(path1));
            if (!discrete::connected(G)) std::cerr << "warning: graph is disconnected\n";
            auto n = discrete::spanning_tree_count(G);
            json j{{"count", n.get_str()}};
            std::string text = n.get_str();
            if (brute) {
                auto b = discrete::brute_force_spanning_trees(G);
                j["brute_force"] = b.get_str();
                j["match"] = b == n;
                text += " (brute force: " + b.get_str() + (b == n ? ", match)" : ", MISMATCH)");
                emit(as_json, j, text);
                return b == n ? 0 : 1;
            }
            emit(as_json, j, text);
        } else if (*sperner) {
            std::vector<int> labels;
            auto T = discrete::parse_triangulation(read_file(path1), read_file(path2), labels);
            auto r = discrete::sperner_check(T, labels);
            bool odd = r.complete_triangles % 2 != 0;
            std::ostringstream out;
            out << "index: " << r.index.get_str() << "\n"
                << "content: " << r.content.get_str() << "\n"
                << "complete triangles: " << r.complete_triangles << "\n"
                << "parity: " << (odd ? "odd" : "even") << "\n";
            emit(as_json,
                 {{"index", r.index.get_str()}, {"content", r.content.get_str()}, {"complete_triangles", r.complete_triangles},
                  {"odd", odd}},
                 out.str());
        } else if (*oct) {
            auto sig = Signature<mpq_class>::counts(0, 7, 0);
            auto a = expr::evaluate<mpq_class>(expr::parse(oa, 7), sig);
            auto b = expr::evaluate<mpq_class>(expr::parse(ob, 7), sig);
            auto p = tables::octonion_product(a, b);
            emit(as_json, {{"terms", terms_json(p)}, {"text", to_string(p)}}, to_string(p));
        }
    } catch (const expr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
