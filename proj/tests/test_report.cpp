#include <doctest.h>

#include <sstream>

#include "purefield/report.hpp"

using namespace purefield;

namespace {

// Minimal parser for the text rendering of a polynomial over a denominator,
// "(c0 + c1*theta + ...)/den" with ascending powers; inverse of
// render_element for the parse-and-compare test.
std::pair<Int, std::vector<Int>> parse_rendered(const std::string& s,
                                                unsigned long n) {
    std::string poly = s;
    Int den = 1;
    if (!poly.empty() && poly[0] == '(') {
        std::size_t close = poly.rfind(")/");
        REQUIRE(close != std::string::npos);
        den = Int(poly.substr(close + 2));
        poly = poly.substr(1, close - 1);
    }
    std::vector<Int> num(n, Int(0));
    std::stringstream ss(poly);
    std::string tok;
    int sign = 1;
    while (ss >> tok) {
        if (tok == "+") {
            sign = 1;
            continue;
        }
        if (tok == "-") {
            sign = -1;
            continue;
        }
        if (tok[0] == '-') {
            sign = -1;
            tok = tok.substr(1);
        }
        Int coeff = 1;
        std::string power;
        std::size_t star = tok.find('*');
        if (star != std::string::npos) {
            coeff = Int(tok.substr(0, star));
            power = tok.substr(star + 1);
        } else if (tok.find("theta") != std::string::npos) {
            power = tok;
        } else {
            coeff = Int(tok);
            power = "";
        }
        unsigned long deg = 0;
        if (!power.empty()) {
            std::size_t caret = power.find('^');
            deg = caret == std::string::npos ? 1 : std::stoul(power.substr(caret + 1));
        }
        num[deg] += sign * coeff;
        sign = 1;
    }
    return {den, num};
}

} // namespace

TEST_CASE("parse_element") {
    auto [den, num] = parse_element("14:7,0,0,0,1,0,0,0", 8);
    CHECK(den == 14);
    CHECK(num[0] == 7);
    CHECK(num[4] == 1);

    CHECK_THROWS_AS(parse_element("no-colon", 4), ValidationError);
    CHECK_THROWS_AS(parse_element("2:1,2", 4), ValidationError);     // wrong count
    CHECK_THROWS_AS(parse_element("0:1,2,3,4", 4), ValidationError); // zero den
    CHECK_THROWS_AS(parse_element("-3:1,2,3,4", 4), ValidationError);
    CHECK_THROWS_AS(parse_element("2:1,x,3,4", 4), ValidationError);
}

TEST_CASE("render_element") {
    CHECK(render_element(1, {Int(1), Int(0)}) == "1");
    CHECK(render_element(1, {Int(0), Int(1)}) == "theta");
    CHECK(render_element(14, {Int(7), Int(0), Int(0), Int(0), Int(1)}) ==
          "(7 + theta^4)/14");
    CHECK(render_element(6, {Int(-2), Int(3), Int(-2), Int(0), Int(1)}) ==
          "(-2 + 3*theta - 2*theta^2 + theta^4)/6");
    CHECK(render_element(1, std::vector<Int>(3, Int(0))) == "0");
}

TEST_CASE("compute report: json schema and determinism") {
    FieldPtr f = validate_field(9, 26);
    BasisReport rep = build_basis_report(f, false);
    Json j = to_json(rep);
    CHECK(j["n"] == 9);
    CHECK(j["a"] == 26);
    CHECK(j["branch"] == "S-nonempty");
    REQUIRE(j["elements"].size() == 9);
    CHECK(j["elements"][0]["den"] == "1");
    CHECK(j["elements"][8]["den"] == "9");
    CHECK(j["elements"][8]["num"].size() == 9);
    CHECK(j["d_K"]["sign"] == 1);
    CHECK(j["d_K"]["factors"]["3"] == 10);
    CHECK(j["d_K"]["factors"]["2"] == 8);
    CHECK(j["checks"]["oracle"] == true);
    CHECK(j["checks"]["disc_match"] == true);
    CHECK(j["checks"]["index"] == "81");
    // byte determinism
    CHECK(to_json(build_basis_report(f, false)).dump() == j.dump());

    // all big integers rendered as decimal strings
    for (const auto& e : j["elements"]) {
        CHECK(e["den"].is_string());
        for (const auto& c : e["num"])
            CHECK(c.is_string());
    }
}

TEST_CASE("compute report: S-empty branch (10, 150)") {
    FieldPtr f = validate_field(10, 150);
    Json j = to_json(build_basis_report(f, false));
    CHECK(j["branch"] == "S-empty");
    std::vector<std::string> dens;
    for (const auto& e : j["elements"])
        dens.push_back(e["den"].get<std::string>());
    CHECK(dens == std::vector<std::string>{"1", "1", "1", "1", "1", "5", "5", "5",
                                           "5", "5"});
    for (const auto& e : j["elements"])
        CHECK(e["choices"].empty());
}

TEST_CASE("text and json encode the same data") {
    for (auto [n, a] : std::vector<std::pair<unsigned long, long>>{
             {9, 26}, {10, 150}, {6, 37}, {8, 833}}) {
        FieldPtr f = validate_field(n, a);
        BasisReport rep = build_basis_report(f, false);
        Json j = to_json(rep);
        std::string text = to_text(rep);

        std::stringstream ss(text);
        std::string line;
        unsigned long seen = 0;
        while (std::getline(ss, line)) {
            std::size_t eq = line.find(" = ");
            REQUIRE(eq != std::string::npos);
            std::string key = line.substr(0, eq);
            std::string val = line.substr(eq + 3);
            if (key == "n")
                CHECK(std::stoul(val) == j["n"].get<unsigned long>());
            else if (key == "a")
                CHECK(Int(val) == Int(j["a"].get<long>()));
            else if (key == "branch")
                CHECK(val == j["branch"].get<std::string>());
            else if (key.rfind("gamma_", 0) == 0) {
                unsigned long m = std::stoul(key.substr(6));
                auto [den, num] = parse_rendered(val, n);
                CHECK(den.get_str() == j["elements"][m]["den"].get<std::string>());
                for (unsigned long i = 0; i < n; ++i)
                    CHECK(num[i].get_str() ==
                          j["elements"][m]["num"][i].get<std::string>());
                ++seen;
            } else if (key == "index")
                CHECK(val == j["checks"]["index"].get<std::string>());
            else if (key == "oracle")
                CHECK((val == "pass") == j["checks"]["oracle"].get<bool>());
            else if (key == "disc_match")
                CHECK((val == "pass") == j["checks"]["disc_match"].get<bool>());
            else if (key == "d_K") {
                Int v = 1;
                std::string rest = val;
                int sign = 1;
                if (!rest.empty() && rest[0] == '-') {
                    sign = -1;
                    rest = rest.substr(1);
                }
                std::stringstream fs(rest);
                std::string term;
                while (fs >> term) {
                    if (term == "*")
                        continue;
                    std::size_t caret = term.find('^');
                    REQUIRE(caret != std::string::npos);
                    v *= pow_ui(Int(term.substr(0, caret)),
                                std::stoul(term.substr(caret + 1)));
                }
                Int expect = 1;
                for (const auto& [p, e] : j["d_K"]["factors"].items())
                    expect *= pow_ui(Int(p), e.get<unsigned long>());
                CHECK(v == expect);
                CHECK(sign == j["d_K"]["sign"].get<int>());
            }
        }
        CHECK(seen == n);
    }
}

TEST_CASE("canonical basis spans the same module and matches Example 2 shape") {
    FieldPtr f = validate_field(9, 26);
    BasisReport plain = build_basis_report(f, false);
    BasisReport canon = build_basis_report(f, true);
    CHECK(module_span_equal(plain.basis.elements, canon.basis.elements));
    // canonical elements keep the (theta^m + lower order)/den shape
    for (unsigned long m = 0; m < 9; ++m) {
        const auto& num = canon.basis.records[m].numerator;
        for (unsigned long t = m + 1; t < 9; ++t)
            CHECK(num[t] == 0);
        CHECK(num[m] > 0);
    }
    CHECK(to_json(canon).dump() == to_json(build_basis_report(f, true)).dump());
}

TEST_CASE("verify report with an explicit element") {
    FieldPtr f = validate_field(8, 833);
    auto [den, num] = parse_element("14:7,0,0,0,1,0,0,0", 8);
    VerifyReport rep = build_verify_report(f, den, num);
    CHECK(rep.element_integral);
    Json j = to_json(rep);
    CHECK(j["integral"] == true);
    CHECK(j["element"]["den"] == "14");

    FieldPtr g = validate_field(2, 2);
    auto [d2, n2] = parse_element("2:0,1", 2);
    CHECK_FALSE(build_verify_report(g, d2, n2).element_integral);
}

TEST_CASE("verify report without element") {
    FieldPtr f = validate_field(9, 26);
    VerifyReport rep = build_verify_report(f);
    CHECK(rep.oracle == std::vector<bool>(9, true));
    CHECK(rep.disc_match);
    CHECK(rep.index == 81);
    Json j = to_json(rep);
    CHECK(j["index"] == "81");
    CHECK(j["disc_match"] == true);
}

TEST_CASE("transfer report serialization") {
    FieldPtr f = validate_field(6, 37);
    TransferReport rep = transfer_check(f, 73);
    Json j = to_json(rep);
    CHECK(j["pass"] == true);
    CHECK(j["modulus"] == "36");
    CHECK(j["elements"].size() == 6);
    std::string text = to_text(rep);
    CHECK(text.find("pass = true") != std::string::npos);
    CHECK(text.find("modulus = 36") != std::string::npos);
}
