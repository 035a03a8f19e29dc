#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    std::string output;
    int status = -1;
};

// Runs a shell pipeline built around the installed binary and captures stdout.
RunResult sh(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
        result.output.append(buffer, got);
    }
    const int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

const std::string cli = std::string("'") + ARCDIAG_CLI_PATH + "'";

}  // namespace

TEST_CASE("arc reads a diagram from stdin, an argument, or a file") {
    CHECK(sh("printf '0-2 1-3' | " + cli + " arc").output == "2\n");
    CHECK(sh(cli + " arc '0-2 1-3'").output == "2\n");
    CHECK(sh(cli + " arc ''").output == "1\n");  // empty diagram

    const RunResult from_file =
        sh("printf '0-3 1-4 2-5' > /tmp/arcdiag_cli_test_input.txt && " + cli +
           " arc --file /tmp/arcdiag_cli_test_input.txt");
    CHECK(from_file.output == "2\n");
    CHECK(from_file.status == 0);
}

TEST_CASE("subcommands compose through pipes") {
    CHECK(sh(cli + " make-c 1 | " + cli + " arc").output == "3\n");
    CHECK(sh(cli + " make-c 4 | " + cli + " arc").output == "3\n");
    CHECK(sh(cli + " make-c 2 | " + cli + " canon | " + cli + " arc").output == "3\n");
}

TEST_CASE("make-c prints the family in pairs form") {
    CHECK(sh(cli + " make-c 1").output == "0-1 2-3 4-5\n");
    CHECK(sh(cli + " make-c 2").output == "0-3 1-8 2-5 4-7 6-9\n");
    CHECK(sh(cli + " make-c 2 --json").output ==
          "{\"m\":5,\"n\":2,\"code\":[3,7,3,7,3,7,3,7,3,7]}\n");
    CHECK(sh(cli + " make-c 0").status == 2);  // domain error
}

TEST_CASE("arc2 prints the cutting pair or none") {
    const RunResult hit = sh("printf '0-2 1-3' | " + cli + " arc2");
    CHECK(hit.output == "0 2\n");
    CHECK(hit.status == 0);

    const RunResult miss = sh(cli + " make-c 1 | " + cli + " arc2");
    CHECK(miss.output == "none\n");
    CHECK(miss.status == 0);

    CHECK(sh("printf '0-2 1-3' | " + cli + " arc2 --json").output ==
          "{\"m\":2,\"arc\":2,\"witness\":[0,2]}\n");
}

TEST_CASE("canon is idempotent and format aware") {
    const std::string canon_c3 = sh(cli + " canon '1 0 3 2 5 4'").output;
    CHECK(canon_c3 == "1 0 3 2 5 4\n");
    CHECK(sh(cli + " canon '2-3 0-1 4-5'").output == canon_c3);
    const std::string twice =
        sh(cli + " canon '0-4 1-3 2-5' | " + cli + " canon").output;
    CHECK(sh(cli + " canon '0-4 1-3 2-5'").output == twice);
    CHECK(sh(cli + " canon 'a b a b'").output == "2 3 0 1\n");
    CHECK(sh(cli + " canon '1 2 1 2' --format gauss").output == "2 3 0 1\n");
}

TEST_CASE("equiv distinguishes classes via its exit code") {
    const RunResult same = sh(cli + " equiv '0-1 2-3 4-5' '0-5 1-2 3-4'");
    CHECK(same.output == "equivalent\n");
    CHECK(same.status == 0);

    const RunResult diff = sh(cli + " equiv '0-1 2-3' '0-2 1-3'");
    CHECK(diff.output == "different\n");
    CHECK(diff.status == 1);

    // mirror images may need the dihedral flag
    const std::string chiral = "'0-1 2-5 3-7 4-6'";
    const std::string mirrored = "'0-7 1-5 2-4 3-6'";
    const RunResult rot = sh(cli + " equiv " + chiral + " " + mirrored);
    const RunResult dih = sh(cli + " equiv --dihedral " + chiral + " " + mirrored);
    CHECK(dih.status == 0);
    CHECK(rot.status == 1);
}

TEST_CASE("obstruction reports a witness or none") {
    CHECK(sh("printf '0-1 2-3 4-5 6-7' | " + cli + " obstruction").output ==
          "n=1: 2-3 4-5 6-7\n");
    CHECK(sh("printf '0-2 1-3' | " + cli + " obstruction").output == "none\n");
    CHECK(sh(cli + " make-c 2 | " + cli + " obstruction --json").output ==
          "{\"m\":5,\"n\":2,\"witness\":[[0,3],[1,8],[2,5],[4,7],[6,9]]}\n");
    CHECK(sh("printf '0-2 1-3' | " + cli + " obstruction --json").output == "{\"m\":2}\n");
}

TEST_CASE("contains answers through the exit code") {
    const RunResult yes = sh(cli + " make-c 2 | " + cli + " contains 2");
    CHECK(yes.output == "yes\n");
    CHECK(yes.status == 0);

    const RunResult no = sh(cli + " make-c 2 | " + cli + " contains 1");
    CHECK(no.output == "no\n");
    CHECK(no.status == 1);
}

TEST_CASE("star classifies or rejects") {
    CHECK(sh(cli + " make-c 2 | " + cli + " star").output == "equivalent-to-c-m n=2\n");
    const RunResult violated = sh("printf '0-3 1-4 2-5' | " + cli + " star");
    CHECK(violated.output == "violated\n");
    CHECK(violated.status == 1);
    CHECK(sh("printf '0-2 1-3' | " + cli + " star").status == 2);  // m too small
}

TEST_CASE("enum emits one json line per class") {
    const RunResult census = sh(cli + " enum 2");
    CHECK(census.output ==
          "{\"m\":2,\"code\":[1,3,1,3],\"orbit\":2,\"arc\":2,\"obstruction\":false,"
          "\"star\":false}\n"
          "{\"m\":2,\"code\":[2,2,2,2],\"orbit\":1,\"arc\":2,\"obstruction\":false,"
          "\"star\":false}\n");
    CHECK(census.status == 0);
}

TEST_CASE("verify-theorem and verify-lemmas succeed on small sweeps") {
    const RunResult theorem = sh(cli + " verify-theorem 4");
    CHECK(theorem.status == 0);
    CHECK(theorem.output.find("\"counterexamples\":[]") != std::string::npos);

    const RunResult lemmas = sh(cli + " verify-lemmas 5");
    CHECK(lemmas.output == "{\"m_max\":5,\"star_classes_checked\":2,\"violations\":0}\n");
    CHECK(lemmas.status == 0);
}

TEST_CASE("verify-theorem output is byte-identical across runs and threads") {
    const std::string one = sh(cli + " verify-theorem 4 --threads 1").output;
    CHECK_FALSE(one.empty());
    CHECK(sh(cli + " verify-theorem 4 --threads 1").output == one);
    CHECK(sh(cli + " verify-theorem 4 --threads 3").output == one);
}

TEST_CASE("realize prints a planar witness or the genus bound") {
    const RunResult planar = sh(cli + " make-c 1 | " + cli + " realize");
    CHECK(planar.output == "planar\n000\n");
    CHECK(planar.status == 0);

    const RunResult torus = sh("printf '0-2 1-3' | " + cli + " realize");
    CHECK(torus.output == "genus >= 1 (min genus 1)\n");
    CHECK(torus.status == 1);

    CHECK(sh("printf '0-2 1-3' | " + cli + " realize --json").output ==
          "{\"m\":2,\"planar\":false}\n");
    CHECK(sh(cli + " realize ''").output == "planar\n");
}

TEST_CASE("gauss-fb prints one-based labels that parse as a gauss word") {
    CHECK(sh(cli + " gauss-fb 2").output == "1 2 4 5 2 3 5 1 3 4\n");
    // all-integer text auto-detects as a pairing, so the format must be forced
    CHECK(sh(cli + " gauss-fb 2 | " + cli + " arc --format gauss").output == "3\n");
    CHECK(sh(cli + " gauss-fb 1").status == 2);
}

TEST_CASE("double prints the twin-doubled diagram") {
    CHECK(sh("printf '0-1' | " + cli + " double").output == "0-3 1-2\n");
    CHECK(sh(cli + " double '0-1' | " + cli + " arc").output == "2\n");
}

TEST_CASE("verify-prop12 checks all four clauses") {
    const RunResult pass = sh(cli + " double '0-1 2-3 4-5' | " + cli + " verify-prop12 1");
    CHECK(pass.output ==
          "{\"n\":1,\"arc_is_three\":true,\"contains_target\":true,\"no_smaller\":true,"
          "\"planar\":true,\"pass\":true}\n");
    CHECK(pass.status == 0);

    const RunResult fail = sh(cli + " make-c 2 | " + cli + " verify-prop12 2");
    CHECK(fail.output.find("\"planar\":false") != std::string::npos);
    CHECK(fail.status == 1);
}

TEST_CASE("render output is byte-identical across runs") {
    const std::string svg = sh(cli + " make-c 2 | " + cli + " render").output;
    CHECK(svg.find("<svg ") != std::string::npos);
    CHECK(sh(cli + " make-c 2 | " + cli + " render").output == svg);

    const std::string highlighted =
        sh("printf '0-1 2-3 4-5 6-7' | " + cli + " render --witness").output;
    CHECK(highlighted.find("#d62728") != std::string::npos);
}

TEST_CASE("bad input exits with the usage code") {
    CHECK(sh("printf '0-2 1-x' | " + cli + " arc").status == 2);
    CHECK(sh("printf '1 2 3' | " + cli + " arc").status == 2);
    CHECK(sh(cli + " bogus-subcommand").status == 2);
    CHECK(sh(cli).status == 2);  // a subcommand is required
    CHECK(sh(cli + " arc --file /nonexistent/path").status == 2);
    CHECK(sh(cli + " --help").status == 0);
}

TEST_CASE("the guard environment variable is honored") {
    CHECK(sh("ARCNUM_GUARD=3 " + cli + " make-c 2 | ARCNUM_GUARD=3 " + cli +
             " contains 2")
              .status == 2);
    CHECK(sh(cli + " make-c 2 | " + cli + " contains 2 --guard 5").status == 0);
    CHECK(sh(cli + " make-c 2 | ARCNUM_GUARD=zz " + cli + " contains 2").status == 2);
}
