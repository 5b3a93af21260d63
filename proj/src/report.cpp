#include "problem.hpp"

#include <sstream>

namespace qhlab {

namespace {

void render_details(std::ostringstream& os, const Json& det, int indent) {
    std::string pad(indent, ' ');
    for (auto& [key, value] : det.items()) {
        if (value.is_object()) {
            os << pad << key << ":\n";
            render_details(os, value, indent + 2);
        } else {
            os << pad << key << ": " << value.dump() << "\n";
        }
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    os << "qhlab report (version " << report.value("report_version", 1)
       << ", seed " << report.value("seed", 0) << ")\n";
    for (const auto& c : report.at("checks")) {
        std::string v = c.value("verdict", "?");
        std::string tag = v == "pass" ? "PASS" : (v == "fail" ? "FAIL" : "ERROR");
        os << "[" << tag << "] " << c.value("command", "?");
        const Json& det = c.at("details");
        for (const char* key : {"algebra", "embedding", "species"})
            if (det.contains(key)) os << " " << det.at(key).get<std::string>();
        os << "\n";
        render_details(os, det, 8);
        if (c.contains("elapsed_ms")) os << "        elapsed_ms: " << c.at("elapsed_ms") << "\n";
    }
    os << (report.value("all_passed", false) ? "all checks passed\n" : "some checks failed\n");
    return os.str();
}

}  // namespace qhlab
