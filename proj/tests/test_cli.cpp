#include "doctest.h"
#include "mdrg/cli.hpp"
#include "mdrg/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using mdrg::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = mdrg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path workdir()
{
    const char* env = std::getenv("MDRG_TEST_TMP");
    const fs::path dir = env ? fs::path(env) : fs::temp_directory_path() / "mdrg_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string file(const std::string& name) { return (workdir() / name).string(); }

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("24-cell end to end through the CLI")
{
    REQUIRE(run({"generate", "cell24", "-o", file("cell24.json")}).code == 0);
    const auto r = run({"certify-mdrg", file("cell24.json"), "--order", "deglex-sum", "--scheme-out",
                        file("cell24_scheme.json")});
    CHECK(r.code == 0);
    const auto report = r.json();
    CHECK(report["result"]["D"] == Json::array({"0,0", "0,1", "1,0", "0,2", "2,0"}));
    CHECK(report["certificates"]["mdrg"]["verdict"] == "pass");
    CHECK(report["artifact_version"] == mdrg::cli::artifact_version);
    CHECK_FALSE(report.contains("timing"));

    const auto d = run({"distances", file("cell24.json"), "--order", "deglex-sum"});
    CHECK(d.code == 0);
    CHECK(d.json()["D"].size() == 5);

    const auto none = run({"discover", file("cell24_scheme.json"), "--m", "1", "--order", "lex"});
    CHECK(none.code == 1);
    CHECK(none.json()["result"]["labelings"].empty());
    const auto some = run({"discover", file("cell24_scheme.json"), "--m", "2", "--order", "deglex-sum"});
    CHECK(some.code == 0);
    CHECK_FALSE(some.json()["result"]["labelings"].empty());

    const auto via_graph = run({"certify-ppoly", file("cell24.json"), "--order", "deglex-sum", "--polys"});
    CHECK(via_graph.code == 0);
    CHECK(via_graph.json()["result"]["polynomials"]["0,2"]["text"] == "1/3*y^2 - 4/3*x - 1/3*y - 8/3");
}

TEST_CASE("generalized 24-cell through the CLI")
{
    const auto g = run({"generate", "gen24cell:2,1/2"});
    REQUIRE(g.code == 0);
    CHECK(g.json()["formal"] == false);
    write(file("g24.json"), g.out);

    const auto ad1 = run({"certify-ppoly", file("g24.json"), "--order", "deglex-y2", "--labeling", "ad1", "--polys",
                          file("polys.json"), "--recurrences"});
    CHECK(ad1.code == 0);
    const auto polys = ad1.json()["result"]["polynomials"];
    CHECK(polys["1,1"]["text"] == "1/3*x*y - y");
    CHECK(polys["2,0"]["text"] == "1/6*x^2 - 2/3*x - 1");
    CHECK(Json::parse(slurp(file("polys.json"))) == polys);
    CHECK(ad1.json()["certificates"]["recurrences"]["verdict"] == "pass");

    const auto ad2 = run({"certify-ppoly", file("g24.json"), "--order", "deglex-y2", "--labeling", "ad2", "--polys"});
    CHECK(ad2.code == 1);
    const auto w = ad2.json()["certificates"]["ppoly"]["witness"].dump();
    for (const auto* label : {"\"1,0\"", "\"0,1\"", "\"0,2\""})
        CHECK(w.find(label) != std::string::npos);
    CHECK(ad2.json()["result"]["polynomials"].is_string());

    CHECK(run({"certify-ppoly", file("g24.json"), "--order", "deglex-sum", "--labeling", "ad2", "--boundary"}).code == 0);
    CHECK(run({"certify-ppoly", file("g24.json"), "--order", "deglex-y2", "--labeling", "ad1", "--partial", "ab:1,0"})
              .code == 0);
    // Incompatible pair is a usage error.
    CHECK(run({"certify-ppoly", file("g24.json"), "--order", "deglex-sum", "--labeling", "ad2", "--partial", "ab:1,0"})
              .code == 2);

    const auto region = run({"type-ab", file("g24.json"), "--labeling", "ad2", "--region"});
    CHECK(region.code == 0);
    CHECK(region.json()["result"]["alpha"] == "[1/2, 1)");
    CHECK(region.json()["result"]["beta"] == "[0, 1)");
    const auto r1 = run({"type-ab", file("g24.json"), "--labeling", "A0=0,0;A2=1,0;A3=0,1;A1=1,1;A4=2,0", "--region"});
    CHECK(r1.json()["result"]["alpha"] == "[0, 1]");
    CHECK(run({"type-ab", file("g24.json"), "--labeling", "ad1", "--alpha", "0", "--beta", "0"}).code == 0);
    CHECK(run({"type-ab", file("g24.json"), "--labeling", "ad1", "--alpha", "2", "--beta", "0"}).code == 2);
    CHECK(run({"type-ab", file("g24.json"), "--labeling", "ad1"}).code == 2);
    CHECK(run({"type-ab", file("g24.json"), "--labeling", "ad1", "--alpha", "1/2"}).code == 2);

    CHECK(run({"generate", "gen24cell:3/2,3/8"}).json()["formal"] == true);
    CHECK(run({"generate", "gen24cell:2,1/8"}).code == 2);
}

TEST_CASE("failing properties exit 1 with a witness")
{
    write(file("c5.json"),
          R"({"m":2,"vertices":["0","1","2","3","4"],"edges":[["0","1",1],["1","2",1],["2","3",1],["3","4",1],["4","0",2]]})");
    const auto r = run({"certify-mdrg", file("c5.json"), "--order", "deglex-sum"});
    CHECK(r.code == 1);
    CHECK(r.json()["certificates"]["mdrg"]["witness"].is_object());

    write(file("broken_scheme.json"), R"({"classes":[{"tag":"I","rows":["10","01"]},{"tag":"J","rows":["11","11"]}]})");
    CHECK(run({"verify-scheme", file("broken_scheme.json")}).code == 1);
}

TEST_CASE("input errors exit 2 with diagnostics")
{
    const auto missing = run({"certify-mdrg", file("does_not_exist.json"), "--order", "lex"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    write(file("bad.json"), "{\n  \"m\": 1,\n  \"vertices\": [\"a\" \"b\"]\n}");
    const auto syntax = run({"distances", file("bad.json"), "--order", "lex"});
    CHECK(syntax.code == 2);
    CHECK(syntax.err.find("bad.json:3:") != std::string::npos);

    write(file("badfield.json"), R"({"m":1,"vertices":["a","b"],"edges":[["a","b",1],["b","a","x"]]})");
    const auto field = run({"distances", file("badfield.json"), "--order", "lex"});
    CHECK(field.code == 2);
    CHECK(field.err.find("edges[1][2]") != std::string::npos);

    write(file("disconnected.json"), R"({"m":1,"vertices":["a","b","c"],"edges":[["a","b",1]]})");
    CHECK(run({"distances", file("disconnected.json"), "--order", "lex"}).code == 2);
    CHECK(run({"certify-mdrg", file("disconnected.json"), "--order", "lex"}).code == 1);

    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"distances", file("c5.json")}).code == 2);
    CHECK(run({"distances", file("c5.json"), "--order", "grevlex"}).code == 2);
    CHECK(run({"distances", file("c5.json"), "--order", "deglex-y2"}).code == 0);
    CHECK(run({"generate", "cycle:2"}).code == 2);
    CHECK(run({"generate", "cycle:x"}).code == 2);
    CHECK(run({"generate", "bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("quiet mode prints nothing")
{
    const auto q = run({"--quiet", "certify-mdrg", file("does_not_exist.json"), "--order", "lex"});
    CHECK(q.code == 2);
    CHECK(q.out.empty());
    CHECK(q.err.empty());
    run({"generate", "cycle:6", "-o", file("c6.json")});
    const auto ok = run({"certify-mdrg", file("c6.json"), "--order", "lex", "--quiet"});
    CHECK(ok.code == 0);
    CHECK(ok.out.empty());
}

TEST_CASE("reports are byte-identical across runs and round trips")
{
    run({"generate", "hamming:3,2", "-o", file("h32.json")});
    const auto a = run({"certify-mdrg", file("h32.json"), "--order", "lex", "--properties"});
    const auto b = run({"certify-mdrg", file("h32.json"), "--order", "lex", "--properties"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    // Parse and re-serialize the graph, then certify the copy.
    const auto doc = mdrg::read_json_file(file("h32.json"));
    write(file("h32_copy.json"), mdrg::graph_to_json(mdrg::graph_from_json(doc)).dump(2));
    CHECK(slurp(file("h32_copy.json")) + "\n" == slurp(file("h32.json")));
    const auto c = run({"certify-mdrg", file("h32_copy.json"), "--order", "lex", "--properties"});
    CHECK(a.json()["certificates"] == c.json()["certificates"]);
    CHECK(a.json()["result"] == c.json()["result"]);

    const auto timed = run({"--timing", "certify-mdrg", file("h32.json"), "--order", "lex"});
    CHECK(timed.json().contains("timing"));
}

TEST_CASE("generators and schemes through the CLI")
{
    run({"generate", "cycle:14", "-o", file("c14.json")});
    run({"generate", "cycle:9", "-o", file("c9.json")});
    REQUIRE(run({"generate", "cartesian:" + file("c14.json") + "," + file("c9.json"), "-o", file("torus.json")}).code ==
            0);
    const auto d = run({"distances", file("torus.json"), "--order", "deglex-sum"});
    CHECK(d.json()["D"].size() == 40);

    run({"generate", "pauli4", "-o", file("z.json")});
    CHECK(run({"verify-scheme", file("z.json")}).code == 0);
    REQUIRE(run({"generate", "symmetrize:2", "--input", file("z.json"), "-o", file("s2.json")}).code == 0);
    const auto v = run({"verify-scheme", file("s2.json")});
    CHECK(v.code == 0);
    CHECK(v.json()["result"]["tensor"]["tags"].size() == 6);
    CHECK(run({"generate", "symmetrize:2"}).code == 2);

    run({"generate", "complete:4", "-o", file("k4.json")});
    run({"certify-mdrg", file("k4.json"), "--order", "lex", "--scheme-out", file("k4_scheme.json")});
    const auto trivial = run({"discover", file("k4_scheme.json"), "--m", "1", "--order", "lex"});
    CHECK(trivial.code == 0);
    CHECK(trivial.json()["result"]["labelings"].size() == 1);

    // Tensor documents: integral parameters pass, formal ones fail only integrality.
    write(file("g24a.json"), run({"generate", "gen24cell:2,1/2"}).out);
    CHECK(run({"verify-scheme", file("g24a.json")}).code == 0);
    write(file("g24b.json"), run({"generate", "gen24cell:3,3/4"}).out);
    const auto formal = run({"verify-scheme", file("g24b.json")});
    CHECK(formal.code == 1);
    CHECK(formal.json()["certificates"]["tensor"]["witness"]["p"] == "27/2");
}

TEST_CASE("thread count comes from the environment")
{
    run({"generate", "cycle:8", "-o", file("c8.json")});
    setenv("MDRG_THREADS", "3", 1);
    const auto three = run({"certify-mdrg", file("c8.json"), "--order", "lex"});
    setenv("MDRG_THREADS", "0", 1);
    const auto automatic = run({"certify-mdrg", file("c8.json"), "--order", "lex"});
    CHECK(three.code == 0);
    CHECK(three.out == automatic.out);
    setenv("MDRG_THREADS", "many", 1);
    CHECK(run({"certify-mdrg", file("c8.json"), "--order", "lex"}).code == 2);
    unsetenv("MDRG_THREADS");
}
