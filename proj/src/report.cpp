#include "purefield/report.hpp"

#include <sstream>

namespace purefield {

namespace {

Json int_to_json(const Int& v) {
    // Degree and radicand fit a machine word at the CLI; fall back to a
    // decimal string elsewhere just in case.
    if (v.fits_slong_p())
        return Json(v.get_si());
    return Json(v.get_str());
}

Json choices_to_json(const BasisElement& rec) {
    Json c = Json::object();
    for (const ChoiceRecord& ch : rec.choices) {
        Json e = Json::object();
        e["k"] = ch.k;
        e["j"] = ch.j;
        e["a_prime"] = ch.a_prime.get_str();
        e["w"] = ch.w.get_str();
        e["z"] = ch.z.get_str();
        e["u"] = ch.u.get_str();
        c[ch.p.get_str()] = e;
    }
    return c;
}

} // namespace

BasisReport build_basis_report(const FieldPtr& field, bool canonical) {
    BasisReport rep;
    rep.n = field->degree();
    rep.a = field->radicand();
    IntegralBasis basis = integral_basis(field);
    rep.s_empty = basis.s_empty;
    rep.d_k = d_K_formula(*field);
    rep.oracle_pass = true;
    for (const FieldElement& e : basis.elements)
        rep.oracle_pass = rep.oracle_pass && is_algebraic_integer(e);
    rep.disc_match = disc_of_elements(basis.elements) == Rat(rep.d_k.value());
    rep.index = transition_determinant(*field, exponent_profile(*field));
    rep.basis = canonical ? canonicalize(basis) : std::move(basis);
    return rep;
}

VerifyReport build_verify_report(const FieldPtr& field) {
    VerifyReport rep;
    rep.n = field->degree();
    rep.a = field->radicand();
    IntegralBasis basis = integral_basis(field);
    for (const FieldElement& e : basis.elements)
        rep.oracle.push_back(is_algebraic_integer(e));
    rep.disc_match =
        disc_of_elements(basis.elements) == Rat(d_K_formula(*field).value());
    rep.index = transition_determinant(*field, exponent_profile(*field));
    return rep;
}

VerifyReport build_verify_report(const FieldPtr& field, const Int& den,
                                 const std::vector<Int>& num) {
    VerifyReport rep;
    rep.n = field->degree();
    rep.a = field->radicand();
    rep.has_element = true;
    FieldElement e(field, den, num);
    rep.element_den = e.den();
    rep.element_num = e.num();
    rep.element_integral = is_algebraic_integer(e);
    return rep;
}

std::pair<Int, std::vector<Int>> parse_element(const std::string& text,
                                               unsigned long n) {
    auto bad = [&](const std::string& why) {
        return ValidationError(ValidationCode::BadInput,
                               "element must be \"q:c0,c1,...,c_{n-1}\": " + why);
    };
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw bad("missing ':'");
    auto parse_int = [&](const std::string& s) {
        if (s.empty() || (!isdigit(static_cast<unsigned char>(s[0])) && s[0] != '-'))
            throw bad("bad integer '" + s + "'");
        try {
            return Int(s);
        } catch (const std::invalid_argument&) {
            throw bad("bad integer '" + s + "'");
        }
    };
    Int den = parse_int(text.substr(0, colon));
    if (den <= 0)
        throw bad("denominator must be positive");
    std::vector<Int> num;
    std::stringstream ss(text.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ','))
        num.push_back(parse_int(tok));
    if (num.size() != n)
        throw bad("expected " + std::to_string(n) + " coefficients, got " +
                  std::to_string(num.size()));
    return {den, num};
}

std::string render_element(const Int& den, const std::vector<Int>& num) {
    std::string poly;
    bool first = true;
    for (std::size_t i = 0; i < num.size(); ++i) {
        const Int& c = num[i];
        if (c == 0)
            continue;
        Int mag = abs(c);
        std::string term;
        if (i == 0)
            term = mag.get_str();
        else {
            if (mag != 1)
                term = mag.get_str() + "*";
            term += "theta";
            if (i > 1)
                term += "^" + std::to_string(i);
        }
        if (first) {
            poly = (c < 0 ? "-" : "") + term;
            first = false;
        } else {
            poly += (c < 0 ? " - " : " + ") + term;
        }
    }
    if (poly.empty())
        poly = "0";
    if (den == 1)
        return poly;
    return "(" + poly + ")/" + den.get_str();
}

Json to_json(const BasisReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["a"] = int_to_json(rep.a);
    j["branch"] = rep.s_empty ? "S-empty" : "S-nonempty";
    Json elems = Json::array();
    for (const BasisElement& rec : rep.basis.records) {
        Json e;
        e["m"] = rec.m;
        e["den"] = rec.denominator.get_str();
        Json num = Json::array();
        for (const Int& c : rec.numerator)
            num.push_back(c.get_str());
        e["num"] = num;
        e["choices"] = choices_to_json(rec);
        elems.push_back(e);
    }
    j["elements"] = elems;
    Json dk;
    dk["sign"] = rep.d_k.sign;
    Json factors = Json::object();
    for (const auto& [p, e] : rep.d_k.exponents)
        factors[p.get_str()] = e;
    dk["factors"] = factors;
    j["d_K"] = dk;
    Json checks;
    checks["oracle"] = rep.oracle_pass;
    checks["disc_match"] = rep.disc_match;
    checks["index"] = rep.index.get_str();
    j["checks"] = checks;
    return j;
}

Json to_json(const VerifyReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["a"] = int_to_json(rep.a);
    if (rep.has_element) {
        Json e;
        e["den"] = rep.element_den.get_str();
        Json num = Json::array();
        for (const Int& c : rep.element_num)
            num.push_back(c.get_str());
        e["num"] = num;
        j["element"] = e;
        j["integral"] = rep.element_integral;
        return j;
    }
    Json oracle = Json::array();
    for (bool b : rep.oracle)
        oracle.push_back(b);
    j["oracle"] = oracle;
    j["disc_match"] = rep.disc_match;
    j["index"] = rep.index.get_str();
    return j;
}

Json to_json(const TransferReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["a"] = int_to_json(rep.a);
    j["a_prime"] = int_to_json(rep.a_prime);
    j["modulus"] = rep.modulus.get_str();
    Json elems = Json::array();
    for (const TransferElementResult& r : rep.elements) {
        Json e;
        e["m"] = r.m;
        e["forward"] = r.forward;
        e["backward"] = r.backward;
        e["den_equal"] = r.den_equal;
        elems.push_back(e);
    }
    j["elements"] = elems;
    j["products_checked"] = rep.products_checked;
    j["products_ok"] = rep.products_ok;
    j["den_sequence_equal"] = rep.den_sequence_equal;
    j["min_rs_equal"] = rep.min_rs_equal;
    j["pass"] = rep.pass;
    return j;
}

std::string to_text(const BasisReport& rep) {
    std::ostringstream out;
    out << "n = " << rep.n << "\n";
    out << "a = " << rep.a.get_str() << "\n";
    out << "branch = " << (rep.s_empty ? "S-empty" : "S-nonempty") << "\n";
    for (const BasisElement& rec : rep.basis.records) {
        out << "gamma_" << rec.m << " = "
            << render_element(rec.denominator, rec.numerator) << "\n";
        if (!rec.choices.empty()) {
            out << "choices_" << rec.m << " =";
            for (const ChoiceRecord& ch : rec.choices)
                out << " p=" << ch.p.get_str() << " k=" << ch.k << " j=" << ch.j
                    << " a'=" << ch.a_prime.get_str() << " w=" << ch.w.get_str()
                    << " z=" << ch.z.get_str() << " u=" << ch.u.get_str();
            out << "\n";
        }
    }
    out << "d_K = ";
    if (rep.d_k.sign < 0)
        out << "-";
    if (rep.d_k.exponents.empty())
        out << "1";
    else {
        bool first = true;
        for (const auto& [p, e] : rep.d_k.exponents) {
            if (!first)
                out << " * ";
            out << p.get_str() << "^" << e;
            first = false;
        }
    }
    out << "\n";
    out << "oracle = " << (rep.oracle_pass ? "pass" : "fail") << "\n";
    out << "disc_match = " << (rep.disc_match ? "pass" : "fail") << "\n";
    out << "index = " << rep.index.get_str() << "\n";
    return out.str();
}

std::string to_text(const VerifyReport& rep) {
    std::ostringstream out;
    out << "n = " << rep.n << "\n";
    out << "a = " << rep.a.get_str() << "\n";
    if (rep.has_element) {
        out << "element = " << render_element(rep.element_den, rep.element_num)
            << "\n";
        out << "integral = " << (rep.element_integral ? "true" : "false") << "\n";
        return out.str();
    }
    for (std::size_t m = 0; m < rep.oracle.size(); ++m)
        out << "oracle_" << m << " = " << (rep.oracle[m] ? "true" : "false") << "\n";
    out << "disc_match = " << (rep.disc_match ? "true" : "false") << "\n";
    out << "index = " << rep.index.get_str() << "\n";
    return out.str();
}

std::string to_text(const TransferReport& rep) {
    std::ostringstream out;
    out << "n = " << rep.n << "\n";
    out << "a = " << rep.a.get_str() << "\n";
    out << "a_prime = " << rep.a_prime.get_str() << "\n";
    out << "modulus = " << rep.modulus.get_str() << "\n";
    for (const TransferElementResult& r : rep.elements)
        out << "transfer_" << r.m << " = forward=" << (r.forward ? "true" : "false")
            << " backward=" << (r.backward ? "true" : "false")
            << " den_equal=" << (r.den_equal ? "true" : "false") << "\n";
    out << "products_checked = " << rep.products_checked << "\n";
    out << "products_ok = " << (rep.products_ok ? "true" : "false") << "\n";
    out << "den_sequence_equal = " << (rep.den_sequence_equal ? "true" : "false")
        << "\n";
    out << "min_rs_equal = " << (rep.min_rs_equal ? "true" : "false") << "\n";
    out << "pass = " << (rep.pass ? "true" : "false") << "\n";
    return out.str();
}

} // namespace purefield
