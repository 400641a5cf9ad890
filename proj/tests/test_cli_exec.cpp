// Exercises the installed CLI end to end; the binary path arrives as argv[1].
#include <cstdio>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

std::string g_cli;
int g_failures = 0;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAILED: " << what << "\n";
        ++g_failures;
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_exec <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    RunResult r = run("compute --n 9 --a 26 --format json");
    expect(r.status == 0, "compute (9,26) exits 0");
    {
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        expect(!j.is_discarded(), "compute emits valid json");
        expect(j["branch"] == "S-nonempty", "branch of (9,26)");
        expect(j["checks"]["oracle"] == true, "oracle flag");
        expect(j["checks"]["index"] == "81", "index of (9,26)");
    }

    r = run("compute --n 10 --a 150 --format json");
    expect(r.status == 0, "compute (10,150) exits 0");
    {
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        expect(j["branch"] == "S-empty", "branch of (10,150)");
        std::vector<std::string> dens;
        for (const auto& e : j["elements"])
            dens.push_back(e["den"].get<std::string>());
        expect(dens == std::vector<std::string>{"1", "1", "1", "1", "1", "5", "5",
                                                "5", "5", "5"},
               "denominators of (10,150)");
    }

    r = run("compute --n 4 --a 4");
    expect(r.status == 2, "compute (4,4) exits 2");
    expect(r.out.find("excluded-prime") != std::string::npos,
           "(4,4) names the excluded-prime reason");

    r = run("compute --n 4 --a 4 --format json");
    {
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        expect(!j.is_discarded() && j["error"] == "excluded-prime",
               "(4,4) json error code");
    }

    r = run("compute --n 2 --a 9");
    expect(r.status == 2 && r.out.find("reducible") != std::string::npos,
           "(2,9) rejected as reducible");

    r = run("compute --n 3 --a 8");
    expect(r.status == 2 && r.out.find("reducible") != std::string::npos,
           "(3,8) rejected as reducible");

    r = run("compute --n 2 --a 27");
    expect(r.status == 2 && r.out.find("n-th-power") != std::string::npos,
           "(2,27) rejected as n-th-power");

    r = run("verify --n 8 --a 833 --element 14:7,0,0,0,1,0,0,0");
    expect(r.status == 0 && r.out.find("integral = true") != std::string::npos,
           "verify (theta^4+7)/14");

    r = run("verify --n 2 --a 2 --element 2:0,1");
    expect(r.status == 0 && r.out.find("integral = false") != std::string::npos,
           "verify theta/2 not integral");

    r = run("verify --n 2 --a 2 --element 2:0,1,9");
    expect(r.status == 2, "malformed element exits 2");

    r = run("verify --n 9 --a 26 --format json");
    {
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        expect(!j.is_discarded() && j["disc_match"] == true && j["index"] == "81",
               "verify (9,26) disc-match and index");
    }

    r = run("periodicity --n 6 --a 37 --a-prime 73");
    expect(r.status == 0 && r.out.find("pass = true") != std::string::npos,
           "periodicity (6,37,73)");

    r = run("periodicity --n 6 --a 37 --a-prime 38");
    expect(r.status == 2 && r.out.find("not-congruent") != std::string::npos,
           "periodicity (6,37,38) rejected");

    r = run("periodicity --n 9 --a 26 --a-prime 26");
    expect(r.status == 0 && r.out.find("pass = true") != std::string::npos,
           "periodicity trivial pair");

    r = run("compute --n 6 --a 18564650 --format json --canonical");
    expect(r.status == 0, "canonical compute on the sextic example");

    if (g_failures) {
        std::cerr << g_failures << " cli checks failed\n";
        return 1;
    }
    std::cout << "all cli checks passed\n";
    return 0;
}
