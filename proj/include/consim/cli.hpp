#pragma once

/**
 * @file cli.hpp
 * @brief Batch command-line front-end.
 *
 * Verbs: canon, check-consimilar, check-similar, solve,
 * reduce-automorphism.  Reports are byte-deterministic; every matrix is
 * printed in the same grammar the parser accepts.  Exit codes: 0 success,
 * 2 parse/shape/input errors, 3 non-Gaussian-rational eigenvalues,
 * 4 inconsistent system under --expect-solvable.
 */

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "consim/automorphism.hpp"
#include "consim/equations.hpp"
#include "consim/format.hpp"

namespace consim {

namespace cli_detail {

// --sigma argument: `1`, `i`, or a pure unit-quaternion literal that is
// reduced to sigma = i in a reselected frame.
struct SigmaArg {
    Sigma sigma = Sigma::One;
    bool has_frame = false;
    Frame frame = Frame::standard();
    std::string display = "1";
};

inline SigmaArg parse_sigma_arg(const std::string& s) {
    if (s == "1") return {Sigma::One, false, Frame::standard(), "1"};
    if (s == "i") return {Sigma::I, false, Frame::standard(), "i"};
    QRat q = parse_quaternion(s);
    if (q.is_real() && (q == QRat(1) || q == QRat(-1)))
        return {Sigma::One, false, Frame::standard(), "1"};
    AutomorphismSpec spec = AutomorphismSpec::by_unit(q);  // validates purity
    auto [sigma, frame] = reduce_automorphism(spec);
    return {sigma, true, frame, to_string(q)};
}

inline Mat<QRat> mat_to_frame(const Mat<QRat>& m, const Frame& f) {
    Mat<QRat> r = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_frame_coords(m(i, j), f);
    return r;
}

inline Mat<QRat> mat_from_frame(const Mat<QRat>& m, const Frame& f) {
    Mat<QRat> r = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = from_frame_coords(m(i, j), f);
    return r;
}

inline void print_frame(std::ostream& out, const Frame& f) {
    out << "frame:\n";
    out << "i1: " << to_string(f.i1) << "\n";
    out << "j1: " << to_string(f.j1) << "\n";
    out << "k1: " << to_string(f.k1) << "\n";
}

inline void print_spec(std::ostream& out, const JordanSpec& spec) {
    for (const auto& b : spec.blocks)
        out << to_string(b.eigenvalue) << " " << b.size << "\n";
}

inline const char* sigma_name(Sigma s) { return s == Sigma::One ? "1" : "i"; }

inline Mat<QRat> load_square(const std::string& path) {
    Mat<QRat> m = parse_matrix_file(path);
    if (m.rows() != m.cols()) throw NotSquare();
    return m;
}

}  // namespace cli_detail

// Runs one command; writes the report to `out`, errors to `err`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"exact canonical forms and matrix equations for quaternion consimilarity"};
    app.require_subcommand(1);

    std::string sigma_str = "1";
    std::string kind_str;
    std::string method_str = "auto";
    std::string file_a, file_b, file_c, tau_str;
    bool expect_solvable = false;

    auto* canon = app.add_subcommand("canon", "canonical form under sigma-consimilarity");
    canon->add_option("--sigma", sigma_str, "1, i, or a pure unit-quaternion literal");
    canon->add_option("matrix", file_a, "matrix file")->required();

    auto* chk_con = app.add_subcommand("check-consimilar", "decide sigma-consimilarity");
    chk_con->add_option("--sigma", sigma_str, "1, i, or a pure unit-quaternion literal");
    chk_con->add_option("left", file_a, "matrix file")->required();
    chk_con->add_option("right", file_b, "matrix file")->required();

    auto* chk_sim = app.add_subcommand("check-similar", "decide similarity over H");
    chk_sim->add_option("left", file_a, "matrix file")->required();
    chk_sim->add_option("right", file_b, "matrix file")->required();

    auto* solve = app.add_subcommand("solve", "solve AX - X^sigma B = C or X - A X^sigma B = C");
    solve->add_option("--kind", kind_str, "sylvester | stein")->required();
    solve->add_option("--sigma", sigma_str, "1, i, or a pure unit-quaternion literal");
    solve->add_option("--method", method_str, "auto | structured | canonical | general");
    solve->add_flag("--expect-solvable", expect_solvable, "exit 4 if the system is inconsistent");
    solve->add_option("A", file_a, "matrix file")->required();
    solve->add_option("B", file_b, "matrix file")->required();
    solve->add_option("C", file_c, "matrix file")->required();

    auto* reduce = app.add_subcommand("reduce-automorphism", "reduce an involutive automorphism");
    reduce->add_option("tau", tau_str, "quaternion literal")->required();

    std::vector<const char*> argv;
    argv.push_back("consim");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (reduce->parsed()) {
            SigmaArg s = parse_sigma_arg(tau_str);
            out << "status: REDUCED sigma=" << sigma_name(s.sigma) << "\n";
            print_frame(out, s.frame);
            return 0;
        }

        SigmaArg sig = parse_sigma_arg(sigma_str);

        if (canon->parsed()) {
            Mat<QRat> a = load_square(file_a);
            Mat<QRat> work = sig.has_frame ? mat_to_frame(a, sig.frame) : a;
            CanonicalResult res = canonical_consimilarity(work, sig.sigma);
            out << "status: CANONICAL sigma=" << sig.display << "\n";
            if (sig.has_frame) print_frame(out, sig.frame);
            out << "spec:\n";
            print_spec(out, res.spec);
            Mat<QRat> canonical_q = jordan_matrix_quaternion(res.spec);
            Mat<QRat> cert = res.certificate;
            if (sig.has_frame) {
                canonical_q = mat_from_frame(canonical_q, sig.frame);
                cert = mat_from_frame(cert, sig.frame);
            }
            out << "canonical:\n" << matrix_to_text(canonical_q);
            out << "certificate:\n" << matrix_to_text(cert);
            return 0;
        }

        if (chk_con->parsed() || chk_sim->parsed()) {
            Mat<QRat> a = load_square(file_a);
            Mat<QRat> b = load_square(file_b);
            if (a.rows() != b.rows()) throw ShapeMismatch("matrices differ in size");
            if (chk_sim->parsed()) {
                bool same = are_similar(a, b);
                out << "status: " << (same ? "SIMILAR" : "NOT-SIMILAR") << "\n";
                out << "spec-left:\n";
                print_spec(out, jordan_spec_quaternion(a));
                out << "spec-right:\n";
                print_spec(out, jordan_spec_quaternion(b));
                return 0;
            }
            if (sig.has_frame) {
                a = mat_to_frame(a, sig.frame);
                b = mat_to_frame(b, sig.frame);
            }
            bool same = are_consimilar(a, b, sig.sigma);
            out << "status: " << (same ? "CONSIMILAR" : "NOT-CONSIMILAR")
                << " sigma=" << sig.display << "\n";
            if (sig.has_frame) print_frame(out, sig.frame);
            out << "spec-left:\n";
            print_spec(out, consimilarity_spec(a, sig.sigma));
            out << "spec-right:\n";
            print_spec(out, consimilarity_spec(b, sig.sigma));
            return 0;
        }

        // solve
        if (kind_str != "sylvester" && kind_str != "stein")
            throw Error("--kind must be sylvester or stein");
        EquationKind kind =
            kind_str == "sylvester" ? EquationKind::Sylvester : EquationKind::Stein;
        Mat<QRat> a = load_square(file_a);
        Mat<QRat> b = load_square(file_b);
        Mat<QRat> c = parse_matrix_file(file_c);
        check_quaternion_equation_shapes(a, b, c);
        if (sig.has_frame) {
            a = mat_to_frame(a, sig.frame);
            b = mat_to_frame(b, sig.frame);
            c = mat_to_frame(c, sig.frame);
        }

        bool complex_inputs = classify_entries(a) != ScalarClass::Quaternion &&
                              classify_entries(b) != ScalarClass::Quaternion;
        SolutionSet res;
        std::string method;
        if (method_str == "structured" || (method_str == "auto" && complex_inputs)) {
            if (!complex_inputs)
                throw Error("--method structured requires complex A and B");
            res = solve_structured(as_complex(a), as_complex(b), c, sig.sigma, kind);
            method = "structured";
        } else if (method_str == "canonical") {
            res = solve_via_canonical(a, b, c, sig.sigma, kind);
            method = "canonical";
        } else if (method_str == "general") {
            res = solve_general(a, b, c, sig.sigma, kind);
            method = "general";
        } else if (method_str == "auto") {
            try {
                res = solve_via_canonical(a, b, c, sig.sigma, kind);
                method = "canonical";
            } catch (const EigenvaluesNotGaussianRational&) {
                res = solve_general(a, b, c, sig.sigma, kind);
                method = "general";
            }
        } else {
            throw Error("--method must be auto, structured, canonical, or general");
        }

        switch (res.tag) {
            case SolveTag::Unique: out << "status: UNIQUE\n"; break;
            case SolveTag::Inconsistent: out << "status: INCONSISTENT\n"; break;
            case SolveTag::Affine:
                out << "status: AFFINE(dim=" << res.dimension() << ")\n";
                break;
        }
        out << "method: " << method << "\n";
        if (sig.has_frame) print_frame(out, sig.frame);
        if (res.tag != SolveTag::Inconsistent) {
            Mat<QRat> particular = res.particular;
            if (sig.has_frame) particular = mat_from_frame(particular, sig.frame);
            out << "particular:\n" << matrix_to_text(particular);
            for (std::size_t t = 0; t < res.basis.size(); ++t) {
                Mat<QRat> y = sig.has_frame ? mat_from_frame(res.basis[t], sig.frame)
                                            : res.basis[t];
                out << "basis[" << t << "]:\n" << matrix_to_text(y);
            }
        }
        if (expect_solvable && res.tag == SolveTag::Inconsistent) {
            err << "error: system is inconsistent\n";
            return 4;
        }
        return 0;
    } catch (const EigenvaluesNotGaussianRational& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace consim
