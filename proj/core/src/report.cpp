#include "summand/report.hpp"

#include <sstream>

#include "summand/ideal.hpp"

namespace summand {

using nlohmann::json;

json ring_summary(const FiniteRing& r) {
    json j;
    j["name"] = describe(*r.descriptor);
    j["descriptor"] = descriptor_to_json(*r.descriptor);
    j["size"] = r.size;
    j["zero"] = r.zero;
    j["one"] = r.one;
    j["idempotent_count"] = idempotents(r).size();
    return j;
}

json witness_to_json(const Witness& w) {
    json j;
    j["elements"] = w.elems;
    if (!w.labels.empty()) j["labels"] = w.labels;
    if (!w.members.empty()) j["members"] = w.members;
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

json verdict_to_json(const VerdictEntry& e) {
    json j;
    j["property"] = e.verdict.property;
    j["side"] = e.verdict.side ? to_string(*e.verdict.side) : "n/a";
    j["method"] = e.verdict.method;
    if (e.skipped) {
        j["status"] = "skipped";
        j["reason"] = e.skip_reason;
    } else {
        j["status"] = "decided";
        j["holds"] = e.verdict.holds;
        if (e.verdict.witness) j["witness"] = witness_to_json(*e.verdict.witness);
    }
    return j;
}

json check_record_to_json(const CheckRecord& c) {
    json j;
    j["id"] = c.id;
    j["subject"] = c.subject;
    j["status"] = to_string(c.status);
    if (!c.universe.empty()) j["universe"] = c.universe;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

json make_report(const FiniteRing& ring, const std::vector<VerdictEntry>& verdicts,
                 const std::vector<TheoremReport>& theorems, const json& timings,
                 const Caps& caps) {
    json j;
    j["ring"] = ring_summary(ring);
    j["verdicts"] = json::array();
    for (const auto& v : verdicts) j["verdicts"].push_back(verdict_to_json(v));
    j["theorems"] = json::array();
    for (const auto& t : theorems)
        for (const auto& c : t.checks) j["theorems"].push_back(check_record_to_json(c));
    j["timings"] = timings;
    j["caps"] = {{"size", caps.size}, {"ideals", caps.ideals}, {"hom", caps.hom}, {"c2", caps.c2}};
    j["version"] = kVersion;
    return j;
}

namespace {

std::string md_escape(std::string s) {
    for (auto& c : s)
        if (c == '|') c = '/';
    return s;
}

}  // namespace

std::string render_markdown(const json& report) {
    std::ostringstream os;
    const auto& ring = report.at("ring");
    os << "# " << ring.at("name").get<std::string>() << "\n\n";
    os << "size " << ring.at("size") << ", zero " << ring.at("zero") << ", one " << ring.at("one")
       << ", " << ring.at("idempotent_count") << " idempotents\n\n";

    const auto& verdicts = report.at("verdicts");
    if (!verdicts.empty()) {
        os << "## Verdicts\n\n";
        os << "| property | side | method | result | witness |\n";
        os << "|---|---|---|---|---|\n";
        for (const auto& v : verdicts) {
            os << "| " << v.at("property").get<std::string>() << " | "
               << v.at("side").get<std::string>() << " | " << v.at("method").get<std::string>()
               << " | ";
            if (v.at("status") == "skipped")
                os << "skipped: " << md_escape(v.at("reason").get<std::string>()) << " | |\n";
            else {
                os << (v.at("holds").get<bool>() ? "holds" : "fails") << " | ";
                if (v.contains("witness")) {
                    const auto& w = v.at("witness");
                    if (w.contains("labels")) {
                        const auto labels = w.at("labels");
                        for (std::size_t i = 0; i < labels.size(); ++i)
                            os << (i ? ", " : "") << md_escape(labels.at(i).get<std::string>());
                    }
                }
                os << " |\n";
            }
        }
        os << "\n";
    }

    const auto& theorems = report.at("theorems");
    if (!theorems.empty()) {
        os << "## Checks\n\n";
        os << "| check | subject | status | detail |\n";
        os << "|---|---|---|---|\n";
        for (const auto& c : theorems) {
            os << "| " << c.at("id").get<std::string>() << " | "
               << md_escape(c.at("subject").get<std::string>()) << " | "
               << c.at("status").get<std::string>() << " | "
               << (c.contains("detail") ? md_escape(c.at("detail").get<std::string>()) : "")
               << " |\n";
        }
        os << "\n";
    }

    os << "## Caps\n\n";
    const auto& caps = report.at("caps");
    os << "size " << caps.at("size") << ", ideals " << caps.at("ideals") << ", hom "
       << caps.at("hom") << ", c2 " << caps.at("c2") << "\n\n";
    os << "version " << report.at("version").get<std::string>() << "\n";
    return os.str();
}

}  // namespace summand
