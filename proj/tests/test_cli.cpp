#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "consim/cli.hpp"
#include "test_support.hpp"

using namespace consim;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream o, e;
    int code = run_cli(args, o, e);
    return {code, o.str(), e.str()};
}

std::string data(const std::string& name) {
    return std::string(CONSIM_TEST_DATA) + "/" + name;
}

// Scratch file helper.
std::string scratch(const std::string& name, const std::string& content) {
    auto dir = std::filesystem::temp_directory_path() / "consim_cli_tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

}  // namespace

TEST_CASE("cli solve on the worked example") {
    auto r = cli({"solve", "--kind", "sylvester", "--sigma", "1", data("worked_a.mat"),
                  data("worked_b.mat"), data("worked_c.mat")});
    CHECK(r.code == 0);
    CHECK(ct::report_status(r.out) == "AFFINE(dim=2)");

    Mat<QRat> a = parse_matrix_file(data("worked_a.mat"));
    Mat<QRat> b = parse_matrix_file(data("worked_b.mat"));
    Mat<QRat> c = parse_matrix_file(data("worked_c.mat"));
    Mat<QRat> x = ct::report_matrix(r.out, "particular");
    CHECK(verify_solution(a, b, c, x, Sigma::One, EquationKind::Sylvester));
    auto basis = ct::report_basis(r.out);
    REQUIRE(basis.size() == 2);
    for (const auto& y : basis) {
        CHECK(equation_lhs(a, b, y, Sigma::One, EquationKind::Sylvester).is_zero());
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                if (!(i == 1 && j == 1)) CHECK(y(i, j).is_zero());
    }
}

TEST_CASE("cli canon with certificate round-trip") {
    std::string path = scratch("jordan_i2.mat", "2 2\n1i 1\n0 1i\n");
    auto r = cli({"canon", "--sigma", "i", path});
    CHECK(r.code == 0);
    CHECK(ct::report_status(r.out) == "CANONICAL sigma=i");
    CHECK(r.out.find("spec:\n1i 2\n") != std::string::npos);
    Mat<QRat> a = parse_matrix_file(path);
    Mat<QRat> cert = ct::report_matrix(r.out, "certificate");
    Mat<QRat> canonical = ct::report_matrix(r.out, "canonical");
    CHECK(inverse(apply_hat(cert, Sigma::I)) * a * cert == canonical);
}

TEST_CASE("cli check-consimilar") {
    std::string p1 = scratch("one.mat", "1 1\n1\n");
    std::string pm1 = scratch("minus_one.mat", "1 1\n-1\n");
    auto r = cli({"check-consimilar", "--sigma", "i", p1, pm1});
    CHECK(r.code == 0);
    CHECK(ct::report_status(r.out) == "CONSIMILAR sigma=i");
    auto r2 = cli({"check-consimilar", "--sigma", "1", p1, pm1});
    CHECK(r2.code == 0);
    CHECK(ct::report_status(r2.out) == "NOT-CONSIMILAR sigma=1");
    auto r3 = cli({"check-similar", p1, pm1});
    CHECK(r3.code == 0);
    CHECK(ct::report_status(r3.out) == "NOT-SIMILAR");
}

TEST_CASE("cli reduce-automorphism") {
    auto r = cli({"reduce-automorphism", "j"});
    CHECK(r.code == 0);
    CHECK(r.out == "status: REDUCED sigma=i\nframe:\ni1: 1j\nj1: 1k\nk1: 1i\n");
    auto r2 = cli({"reduce-automorphism", "1"});
    CHECK(r2.code == 0);
    CHECK(ct::report_status(r2.out) == "REDUCED sigma=1");
    auto r3 = cli({"reduce-automorphism", "1+j"});
    CHECK(r3.code == 2);
    auto r4 = cli({"reduce-automorphism", "i+j"});
    CHECK(r4.code == 2);
}

TEST_CASE("cli solve with a literal sigma matches the hat run on transported inputs") {
    auto r = cli({"solve", "--kind", "sylvester", "--sigma", "j", data("worked_a.mat"),
                  data("worked_b.mat"), data("worked_c.mat")});
    REQUIRE(r.code == 0);
    Mat<QRat> a = parse_matrix_file(data("worked_a.mat"));
    Mat<QRat> b = parse_matrix_file(data("worked_b.mat"));
    Mat<QRat> c = parse_matrix_file(data("worked_c.mat"));
    auto spec = AutomorphismSpec::by_unit(QRat::j());
    Mat<QRat> x = ct::report_matrix(r.out, "particular");
    CHECK(verify_solution(a, b, c, x, spec, EquationKind::Sylvester));
    for (const auto& y : ct::report_basis(r.out))
        CHECK(verify_solution(a, b, Mat<QRat>(2, 2), y, spec, EquationKind::Sylvester));
}

TEST_CASE("cli canon with a literal sigma") {
    std::string path = scratch("aq2.mat", "2 2\n0 0\n0 1i\n");
    auto r = cli({"canon", "--sigma", "j", path});
    REQUIRE(r.code == 0);
    CHECK(ct::report_status(r.out) == "CANONICAL sigma=1j");
    Mat<QRat> a = parse_matrix_file(path);
    Mat<QRat> cert = ct::report_matrix(r.out, "certificate");
    Mat<QRat> canonical = ct::report_matrix(r.out, "canonical");
    auto spec = AutomorphismSpec::by_unit(QRat::j());
    Mat<QRat> cert_auto = cert;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            cert_auto(i, j) = apply_automorphism(cert(i, j), spec);
    CHECK(inverse(cert_auto) * a * cert == canonical);
}

TEST_CASE("cli exit codes") {
    std::string bad = scratch("bad.mat", "1 1\n1+q\n");
    CHECK(cli({"canon", "--sigma", "1", bad}).code == 2);

    std::string rect = scratch("rect.mat", "1 2\n1 2\n");
    CHECK(cli({"canon", "--sigma", "1", rect}).code == 2);

    CHECK(cli({"canon", "--sigma", "1", "/nonexistent.mat"}).code == 2);

    // eigenvalues +-sqrt(2)
    std::string sqrt2 = scratch("sqrt2.mat", "2 2\n0 2\n1 0\n");
    CHECK(cli({"canon", "--sigma", "1", sqrt2}).code == 3);

    // x - x = 1 is inconsistent
    std::string one = scratch("one.mat", "1 1\n1\n");
    std::string half = scratch("half.mat", "1 1\n1/2\n");
    std::string two = scratch("two.mat", "1 1\n2\n");
    auto r = cli({"solve", "--kind", "stein", "--sigma", "1", two, half, one});
    CHECK(r.code == 0);
    CHECK(ct::report_status(r.out) == "INCONSISTENT");
    auto r2 = cli({"solve", "--kind", "stein", "--sigma", "1", "--expect-solvable", two,
                   half, one});
    CHECK(r2.code == 4);

    CHECK(cli({"solve", "--kind", "nope", "--sigma", "1", one, one, one}).code == 2);
    CHECK(cli({"nonsense-verb"}).code == 2);

    // C with the wrong shape
    std::string c_bad = scratch("c_bad.mat", "2 1\n0\n0\n");
    CHECK(cli({"solve", "--kind", "sylvester", "--sigma", "1", one, one, c_bad}).code == 2);
}

TEST_CASE("cli reports are deterministic") {
    std::vector<std::string> args = {"solve", "--kind",           "sylvester",
                                     "--sigma", "i",              data("worked_a.mat"),
                                     data("worked_b.mat"),         data("worked_c.mat")};
    auto r1 = cli(args);
    auto r2 = cli(args);
    CHECK(r1.out == r2.out);
    CHECK(r1.code == r2.code);
}

TEST_CASE("cli solve methods agree") {
    std::string aq = scratch("aq.mat", "1 1\nj\n");
    std::string bq = scratch("bq.mat", "1 1\n1\n");
    std::string cq = scratch("cq.mat", "1 1\n1\n");
    auto rc = cli({"solve", "--kind", "sylvester", "--sigma", "i", "--method", "canonical",
                   aq, bq, cq});
    auto rg = cli({"solve", "--kind", "sylvester", "--sigma", "i", "--method", "general",
                   aq, bq, cq});
    REQUIRE(rc.code == 0);
    REQUIRE(rg.code == 0);
    CHECK(ct::report_status(rc.out) == ct::report_status(rg.out));
    CHECK(rc.out.find("method: canonical\n") != std::string::npos);
    CHECK(rg.out.find("method: general\n") != std::string::npos);

    // structured requires complex coefficients
    CHECK(cli({"solve", "--kind", "sylvester", "--sigma", "i", "--method", "structured",
               aq, bq, cq}).code == 2);
}
