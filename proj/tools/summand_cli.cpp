#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "summand/fixtures.hpp"
#include "summand/ideal.hpp"
#include "summand/module.hpp"
#include "summand/properties.hpp"
#include "summand/report.hpp"

namespace {

using namespace summand;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

// A source is an inline JSON document, a shipped fixture name, or a path to
// a descriptor file.
RingHandle resolve_source(const std::string& source, const Caps& caps) {
    if (!source.empty() && source.front() == '{') return construct(parse_descriptor(source), caps);
    if (is_fixture(source)) return fixture_ring(source, caps);
    std::ifstream in(source);
    if (!in) throw DescriptorError("cannot open descriptor file: " + source);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return construct(parse_descriptor(buffer.str()), caps);
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(csv);
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void emit(const json& report, const std::string& format) {
    if (format == "md")
        std::cout << render_markdown(report);
    else
        std::cout << report.dump(2) << "\n";
}

int cmd_check(const std::string& source, const std::string& props_csv, const std::string& side_opt,
              const std::string& method_opt, const std::string& format, const Caps& caps) {
    const auto start = std::chrono::steady_clock::now();
    const RingHandle ring = resolve_source(source, caps);

    const auto props = split_list(props_csv);
    std::vector<Side> sides;
    if (side_opt == "both")
        sides = {Side::left, Side::right};
    else if (side_opt == "left")
        sides = {Side::left};
    else if (side_opt == "right")
        sides = {Side::right};
    else
        throw DescriptorError("unknown side: " + side_opt);

    std::vector<SspMethod> methods;
    if (method_opt == "both")
        methods = {SspMethod::definitional, SspMethod::ef_criterion};
    else if (method_opt == "definitional")
        methods = {SspMethod::definitional};
    else if (method_opt == "ef")
        methods = {SspMethod::ef_criterion};
    else
        throw DescriptorError("unknown method: " + method_opt);

    std::vector<VerdictEntry> entries;
    json per_check = json::object();
    auto timed = [&](const std::string& key, auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        per_check[key] = ms_since(t0);
    };

    for (const auto& prop : props) {
        if (prop == "regular") {
            timed(prop, [&] { entries.push_back({is_regular_ring(*ring), false, ""}); });
        } else if (prop == "abelian") {
            timed(prop, [&] { entries.push_back({is_abelian(*ring), false, ""}); });
        } else if (prop == "semisimple") {
            timed(prop, [&] {
                const auto rad = semisimplicity(*ring);
                PropertyVerdict v{"semisimple", std::nullopt, "radical-scan", rad.is_semisimple,
                                  std::nullopt};
                if (!rad.is_semisimple) {
                    Witness w;
                    w.members = to_list(rad.radical);
                    w.note = "nonzero radical";
                    v.witness = std::move(w);
                }
                entries.push_back({std::move(v), false, ""});
            });
        } else if (prop == "ssp") {
            for (Side side : sides)
                for (SspMethod method : methods)
                    timed(prop + std::string("/") + to_string(side) + "/" + to_string(method),
                          [&] { entries.push_back({check_ssp(ring, side, method), false, ""}); });
        } else if (prop == "sip") {
            for (Side side : sides)
                timed(prop + std::string("/") + to_string(side),
                      [&] { entries.push_back({check_sip(ring, side), false, ""}); });
        } else if (prop == "c3") {
            for (Side side : sides)
                timed(prop + std::string("/") + to_string(side),
                      [&] { entries.push_back({check_c3(ring, side), false, ""}); });
        } else if (prop == "c2") {
            for (Side side : sides)
                timed(prop + std::string("/") + to_string(side), [&] {
                    try {
                        entries.push_back({check_c2(ring, side, caps), false, ""});
                    } catch (const CapExceeded& e) {
                        PropertyVerdict v{"c2", side, "ideal-enumeration", true, std::nullopt};
                        entries.push_back({std::move(v), true, e.what()});
                    }
                });
        } else {
            throw DescriptorError("unknown property: " + prop);
        }
    }

    json timings;
    timings["per_check"] = per_check;
    timings["total_ms"] = ms_since(start);
    emit(make_report(*ring, entries, {}, timings, caps), format);

    for (const auto& e : entries)
        if (!e.skipped && !e.verdict.holds) return kExitFail;
    return kExitPass;
}

int cmd_verify(const std::string& source, const std::string& format, const Caps& caps) {
    const auto start = std::chrono::steady_clock::now();
    const RingHandle ring = resolve_source(source, caps);
    std::vector<std::pair<std::string, double>> suite_times;
    const auto suites = verify_suites(ring, caps, &suite_times);

    json timings;
    json per_check = json::object();
    for (const auto& [label, ms] : suite_times) per_check[label] = ms;
    timings["per_check"] = per_check;
    timings["total_ms"] = ms_since(start);
    emit(make_report(*ring, {}, suites, timings, caps), format);

    for (const auto& suite : suites)
        if (!suite.all_passed()) return kExitFail;
    return kExitPass;
}

int cmd_fixtures_list(const std::string& format) {
    if (format == "json") {
        json j = json::array();
        for (const auto& f : fixture_catalog()) j.push_back({{"name", f.name}, {"summary", f.summary}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& f : fixture_catalog()) std::cout << f.name << ": " << f.summary << "\n";
    }
    return kExitPass;
}

int cmd_fixtures_run(const std::string& name, const std::string& format, const Caps& caps) {
    if (!is_fixture(name)) throw DescriptorError("unknown fixture: " + name);
    const auto start = std::chrono::steady_clock::now();
    const auto outcome = run_fixture(name, caps);

    TheoremReport combined;
    combined.subject = outcome.name;
    for (const auto& line : outcome.trace)
        combined.checks.push_back({"construction", outcome.name, CheckStatus::passed, "", line});
    for (const auto& a : outcome.assertions) combined.checks.push_back(a);

    json timings;
    timings["total_ms"] = ms_since(start);
    emit(make_report(*outcome.subject, {}, {combined}, timings, caps), format);
    return outcome.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exhaustive property decisions for explicit finite rings and modules"};
    app.require_subcommand(1);
    app.fallthrough();

    Caps caps;
    app.add_option("--cap-size", caps.size, "max carrier size for construction");
    app.add_option("--cap-ideals", caps.ideals, "max ring size for complete ideal enumeration");
    app.add_option("--cap-hom", caps.hom, "max candidate assignments in hom enumeration");

    std::string format = "json";
    app.add_option("--format", format, "output format: json or md")
        ->check(CLI::IsMember({"json", "md"}));

    auto* check = app.add_subcommand("check", "decide properties of one ring");
    std::string check_source;
    std::string props = "regular,abelian,ssp,sip,c3,c2,semisimple";
    std::string side = "both";
    std::string method = "both";
    check->add_option("source", check_source, "descriptor file, fixture name, or inline JSON")
        ->required();
    check->add_option("--props", props, "comma-separated list of properties");
    check->add_option("--side", side, "left, right, or both")
        ->check(CLI::IsMember({"left", "right", "both"}));
    check->add_option("--method", method, "ssp criterion: definitional, ef, or both")
        ->check(CLI::IsMember({"definitional", "ef", "both"}));

    auto* verify = app.add_subcommand("verify", "run the full cross-check suite on one ring");
    std::string verify_source;
    verify->add_option("source", verify_source, "descriptor file, fixture name, or inline JSON")
        ->required();

    auto* fixtures = app.add_subcommand("fixtures", "list or run the shipped fixtures");
    fixtures->require_subcommand(1);
    auto* fixtures_list = fixtures->add_subcommand("list", "list fixtures");
    auto* fixtures_run = fixtures->add_subcommand("run", "run one fixture's assertions");
    std::string fixture_name;
    fixtures_run->add_option("name", fixture_name, "fixture name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitInput;
    }

    try {
        if (check->parsed()) return cmd_check(check_source, props, side, method, format, caps);
        if (verify->parsed()) return cmd_verify(verify_source, format, caps);
        if (fixtures_list->parsed()) return cmd_fixtures_list(format);
        if (fixtures_run->parsed()) return cmd_fixtures_run(fixture_name, format, caps);
    } catch (const DescriptorError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const CapExceeded& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
