#ifndef PUREFIELD_REPORT_HPP
#define PUREFIELD_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "purefield/basis.hpp"
#include "purefield/discriminant.hpp"
#include "purefield/periodicity.hpp"

namespace purefield {

using Json = nlohmann::ordered_json;

struct BasisReport {
    unsigned long n = 0;
    Int a;
    bool s_empty = true;
    IntegralBasis basis;
    DiscriminantFactorization d_k;
    bool oracle_pass = false;
    bool disc_match = false;
    Int index;
};

struct VerifyReport {
    unsigned long n = 0;
    Int a;
    bool has_element = false;
    Int element_den;
    std::vector<Int> element_num;
    bool element_integral = false;
    std::vector<bool> oracle; // per basis element, when no explicit element given
    bool disc_match = false;
    Int index;
};

BasisReport build_basis_report(const FieldPtr& field, bool canonical);
VerifyReport build_verify_report(const FieldPtr& field);
VerifyReport build_verify_report(const FieldPtr& field, const Int& den,
                                 const std::vector<Int>& num);

// "q:c0,c1,...,c_{n-1}"; throws ValidationError(BadInput) when malformed.
std::pair<Int, std::vector<Int>> parse_element(const std::string& text,
                                               unsigned long n);

// Ascending powers of theta with an explicit denominator, e.g.
// "(7 + theta^4)/14".
std::string render_element(const Int& den, const std::vector<Int>& num);

Json to_json(const BasisReport& rep);
Json to_json(const VerifyReport& rep);
Json to_json(const TransferReport& rep);

std::string to_text(const BasisReport& rep);
std::string to_text(const VerifyReport& rep);
std::string to_text(const TransferReport& rep);

} // namespace purefield

#endif
