// Command-line front end: enumeration of semistandard skyline fillings, key
// polynomials by both routes, involution tracing, derived families, the
// verification sweep, and the classical row-move comparison.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "skyline/classify.hpp"
#include "skyline/demazure.hpp"
#include "skyline/derivation.hpp"
#include "skyline/operators.hpp"
#include "skyline/verify.hpp"

namespace {

using nlohmann::json;

skyline::Composition parse_alpha(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad composition part: '" + item + "'");
        }
        if (pos != item.size() || v < 0)
            throw std::invalid_argument("bad composition part: '" + item + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty composition");
    return skyline::Composition(std::move(parts));
}

skyline::Filling load_filling(const std::string& file,
                              const std::vector<std::string>& inline_rows) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open " + file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string text = buffer.str();
        std::size_t first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{')
            return skyline::filling_from_json(json::parse(text));
        return skyline::filling_from_text(text);
    }
    if (inline_rows.empty())
        throw std::invalid_argument("no filling given (use --file or rows after --)");
    std::string text;
    for (const std::string& row : inline_rows) {
        std::string normalized = row;
        for (char& ch : normalized)
            if (ch == ',') ch = ' ';
        text += normalized;
        text += '\n';
    }
    return skyline::filling_from_text(text);
}

skyline::Filling require_in_ssf(skyline::Filling f, const skyline::Composition& shape) {
    if (f.shape() != shape)
        throw std::invalid_argument("filling shape does not match the composition");
    if (!skyline::validate_filling(f).ok)
        throw std::invalid_argument("filling is not semistandard");
    return f;
}

std::string annotated_text(const skyline::Filling& f, int value) {
    skyline::Classification cls = skyline::classify(f, value);
    std::ostringstream out;
    const auto& rows = f.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << '\n';
        if (rows[i].empty()) {
            out << '-';
            continue;
        }
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) out << ' ';
            out << rows[i][j];
            int v = rows[i][j];
            if (v == value || v == value + 1) {
                auto kind =
                    cls.at({static_cast<int>(i) + 1, static_cast<int>(j) + 1}).kind;
                if (kind == skyline::EntryKind::Free) out << '*';
                if (kind == skyline::EntryKind::PseudoFree) out << '~';
            }
        }
    }
    return out.str();
}

json classified_cells_json(const skyline::Filling& f, int value) {
    skyline::Classification cls = skyline::classify(f, value);
    json free_cells = json::array(), pseudo = json::array();
    for (const auto& [cell, ec] : cls.cells()) {
        if (ec.kind == skyline::EntryKind::Free)
            free_cells.push_back({cell.row, cell.col});
        else if (ec.kind == skyline::EntryKind::PseudoFree)
            pseudo.push_back({cell.row, cell.col});
    }
    return {{"free", std::move(free_cells)}, {"pseudo_free", std::move(pseudo)}};
}

int run_enumerate(const std::string& alpha_text, bool as_json) {
    skyline::Composition alpha = parse_alpha(alpha_text);
    std::vector<skyline::Filling> fillings = skyline::enumerate_ssf(alpha);
    if (as_json) {
        json out{{"alpha", alpha.parts()}, {"count", fillings.size()}};
        out["fillings"] = json::array();
        for (const auto& f : fillings) out["fillings"].push_back(skyline::to_json(f));
        std::cout << out.dump() << '\n';
    } else {
        for (const auto& f : fillings) std::cout << skyline::to_text(f) << "\n\n";
        std::cout << "count: " << fillings.size() << '\n';
    }
    return 0;
}

int run_key(const std::string& alpha_text, const std::string& method, bool as_json) {
    skyline::Composition alpha = parse_alpha(alpha_text);
    json out{{"alpha", alpha.parts()}, {"method", method}};
    int status = 0;
    std::vector<std::string> lines;
    if (method == "recursive" || method == "both") {
        skyline::Polynomial p = skyline::key_recursive(alpha);
        lines.push_back(skyline::to_text(p));
        out["recursive"] = skyline::to_json(p);
    }
    if (method == "combinatorial" || method == "both") {
        skyline::Polynomial p = skyline::key_combinatorial(alpha);
        lines.push_back(skyline::to_text(p));
        out["combinatorial"] = skyline::to_json(p);
    }
    if (method == "both") {
        bool equal = lines[0] == lines[1];
        lines.push_back(equal ? "EQUAL" : "DIFFER");
        out["equal"] = equal;
        if (!equal) status = 1;
    }
    if (as_json) {
        std::cout << out.dump() << '\n';
    } else {
        for (const auto& line : lines) std::cout << line << '\n';
    }
    return status;
}

int run_involution(const std::string& alpha_text, const std::string& file,
                   const std::vector<std::string>& rows, int r, int t, bool trace,
                   bool as_json) {
    skyline::Composition alpha = parse_alpha(alpha_text);
    skyline::Filling f = require_in_ssf(load_filling(file, rows), alpha);
    std::vector<skyline::Filling> steps = skyline::phi_with_trace(f, r, t);
    if (as_json) {
        json out{{"alpha", alpha.parts()},
                 {"row", r},
                 {"value", t},
                 {"input", skyline::to_json(f)},
                 {"image", skyline::to_json(steps.back())}};
        if (trace) {
            out["trace"] = json::array();
            for (const auto& step : steps) {
                json entry{{"filling", skyline::to_json(step)}};
                entry.update(classified_cells_json(step, t));
                out["trace"].push_back(std::move(entry));
            }
        }
        std::cout << out.dump() << '\n';
    } else if (trace) {
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (i) std::cout << '\n';
            std::cout << annotated_text(steps[i], t) << '\n';
        }
    } else {
        std::cout << skyline::to_text(steps.back()) << '\n';
    }
    return 0;
}

int run_derive(const std::string& alpha_text, const std::string& file,
               const std::vector<std::string>& rows, bool as_json) {
    skyline::Composition alpha = parse_alpha(alpha_text);
    auto ascent = skyline::first_ascent(alpha);
    if (!ascent) throw std::invalid_argument("composition is a partition (no ascent)");
    skyline::Composition source_shape = alpha.with_swapped_parts(*ascent);
    skyline::Filling source = require_in_ssf(load_filling(file, rows), source_shape);
    skyline::DerivedFamily family = skyline::derived_fillings(source, alpha);
    if (as_json) {
        json out{{"alpha", alpha.parts()},
                 {"ascent_row", family.ascent_row},
                 {"source", skyline::to_json(family.source)}};
        out["members"] = json::array();
        for (const auto& member : family.members)
            out["members"].push_back(skyline::to_json(member));
        std::cout << out.dump() << '\n';
    } else {
        for (std::size_t i = 0; i < family.members.size(); ++i) {
            if (i) std::cout << '\n';
            std::cout << skyline::to_text(family.members[i]) << '\n';
        }
        std::cout << "members: " << family.members.size() << '\n';
    }
    return 0;
}

int run_verify(int max_n, int max_part, bool as_json) {
    std::vector<skyline::Composition> family = skyline::compositions_up_to(max_n, max_part);
    json reports = json::array();
    long long total_ms = 0;
    int failures = 0;
    if (!as_json)
        std::cout << "alpha           fillings  checks  failures      ms\n";
    for (const auto& alpha : family) {
        skyline::VerificationReport report = skyline::verify_composition(alpha);
        int failed = 0;
        for (const auto& c : report.checks) failed += c.pass ? 0 : 1;
        failures += failed;
        total_ms += report.elapsed_ms;
        if (as_json) {
            reports.push_back(skyline::to_json(report));
        } else {
            std::ostringstream name;
            name << '(';
            for (std::size_t i = 0; i < report.alpha.size(); ++i) {
                if (i) name << ',';
                name << report.alpha[i];
            }
            name << ')';
            std::cout << std::left << std::setw(16) << name.str() << std::right
                      << std::setw(8) << skyline::enumerate_ssf(alpha).size() << "  "
                      << std::setw(6) << report.checks.size() << "  " << std::setw(8)
                      << failed << "  " << std::setw(6) << report.elapsed_ms << '\n';
        }
    }
    if (as_json) {
        std::cout << json{{"reports", std::move(reports)}, {"failures", failures}}.dump()
                  << '\n';
    } else {
        std::cout << "compositions: " << family.size() << "  failures: " << failures
                  << "  total_ms: " << total_ms << '\n';
    }
    return failures == 0 ? 0 : 1;
}

int run_bender_knuth(const std::string& alpha_text, int r, int t, bool as_json) {
    skyline::Composition alpha = parse_alpha(alpha_text);
    skyline::VerificationReport report = skyline::bender_knuth_check(alpha, r, t);
    if (as_json) {
        std::cout << skyline::to_json(report).dump() << '\n';
    } else {
        for (const auto& c : report.checks)
            std::cout << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << '\n';
        std::cout << "result: " << (report.all_pass() ? "pass" : "fail") << '\n';
    }
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semistandard skyline fillings, involutions and key polynomials"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    std::string alpha_text, method = "both", file;
    std::vector<std::string> rows;
    int r = 0, t = 0, max_n = 4, max_part = 3;
    bool trace = false;

    auto* enumerate = app.add_subcommand("enumerate", "list SSF(alpha) in canonical order");
    enumerate->add_option("alpha", alpha_text, "composition, e.g. 1,3,0,2")->required();

    auto* key = app.add_subcommand("key", "key polynomial of alpha");
    key->add_option("alpha", alpha_text)->required();
    key->add_option("--method", method, "recursive|combinatorial|both")
        ->check(CLI::IsMember({"recursive", "combinatorial", "both"}));

    auto* involution = app.add_subcommand("involution", "apply phi_{r,t} to a filling");
    involution->add_option("alpha", alpha_text)->required();
    involution->add_option("--r", r, "row index")->required();
    involution->add_option("--t", t, "entry value")->required();
    involution->add_flag("--trace", trace, "print every intermediate filling");
    involution->add_option("--file", file, "filling file (text or JSON)");
    involution->add_option("rows", rows, "filling rows, one per argument ('-' = empty)");

    auto* derive = app.add_subcommand("derive", "derived fillings of a source filling");
    derive->add_option("alpha", alpha_text)->required();
    derive->add_option("--file", file, "source filling file (text or JSON)");
    derive->add_option("rows", rows, "source filling rows, one per argument");

    auto* verify = app.add_subcommand("verify", "run the verification sweep");
    verify->add_option("--max-n", max_n, "max composition length");
    verify->add_option("--max-part", max_part, "max part size");

    auto* bk = app.add_subcommand("bender-knuth", "classical row-move comparison");
    bk->add_option("alpha", alpha_text)->required();
    bk->add_option("--r", r, "row index")->required();
    bk->add_option("--t", t, "entry value")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(alpha_text, as_json);
        if (key->parsed()) return run_key(alpha_text, method, as_json);
        if (involution->parsed())
            return run_involution(alpha_text, file, rows, r, t, trace, as_json);
        if (derive->parsed()) return run_derive(alpha_text, file, rows, as_json);
        if (verify->parsed()) return run_verify(max_n, max_part, as_json);
        if (bk->parsed()) return run_bender_knuth(alpha_text, r, t, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
