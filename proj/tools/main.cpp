#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "purefield/report.hpp"

namespace {

using namespace purefield;

int emit_error(const std::string& format, const std::string& code,
               const std::string& message) {
    if (format == "json") {
        Json j;
        j["error"] = code;
        j["message"] = message;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "error: " << code << ": " << message << "\n";
    }
    return 2;
}

void emit(const std::string& format, const Json& j, const std::string& text) {
    if (format == "json")
        std::cout << j.dump() << "\n";
    else
        std::cout << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"integral bases and discriminants of pure number fields "
                 "Q(a^(1/n))"};
    app.require_subcommand(1);

    long n = 0, a = 0, a_prime = 0;
    std::string format = "text";
    std::string element;
    bool canonical = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "degree of the field")->required();
        cmd->add_option("--a", a, "radicand")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* compute = app.add_subcommand(
        "compute", "construct an integral basis and the field discriminant");
    add_common(compute);
    compute->add_flag("--canonical", canonical,
                      "emit the HNF-normalized form of the basis");

    CLI::App* verify = app.add_subcommand(
        "verify", "run the integrality oracle and the discriminant cross-check");
    add_common(verify);
    verify->add_option("--element", element,
                       "single element \"q:c0,c1,...\" to test for integrality");

    CLI::App* periodicity = app.add_subcommand(
        "periodicity", "transfer check between congruent squarefree radicands");
    add_common(periodicity);
    periodicity->add_option("--a-prime", a_prime, "congruent radicand")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (n < 2)
            throw ValidationError(ValidationCode::BadInput, "degree must be >= 2");
        FieldPtr field = validate_field(static_cast<unsigned long>(n), Int(a));
        if (compute->parsed()) {
            BasisReport rep = build_basis_report(field, canonical);
            emit(format, to_json(rep), to_text(rep));
        } else if (verify->parsed()) {
            VerifyReport rep =
                element.empty()
                    ? build_verify_report(field)
                    : [&] {
                          auto [den, num] = parse_element(element, field->degree());
                          return build_verify_report(field, den, num);
                      }();
            emit(format, to_json(rep), to_text(rep));
        } else {
            TransferReport rep = transfer_check(field, Int(a_prime));
            emit(format, to_json(rep), to_text(rep));
        }
    } catch (const ValidationError& e) {
        return emit_error(format, code_string(e.code()), e.what());
    } catch (const DomainError& e) {
        return emit_error(format, "bad-input", e.what());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
