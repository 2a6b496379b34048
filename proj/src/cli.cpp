#include "ajtorus/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ajtorus/acceptance.hpp"
#include "ajtorus/errors.hpp"
#include "ajtorus/parse.hpp"

namespace ajt {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::optional<fs::path> cache_file(const KnotExpr& k) {
    const char* dir = std::getenv("AJTORUS_JONES_CACHE");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    std::string name;
    for (char ch : k.to_string()) name += std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' ? ch : '_';
    return fs::path(dir) / (name + ".txt");
}

CommandResult usage_error(const std::string& msg) { return {kExitUsage, "", msg + "\n"}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Scan evidence as JSON / text; `candidate` is the normalized candidate when known.
json scan_to_json(const ScanReport& r, const std::optional<SkewOperator>& candidate) {
    json j{{"knot", r.knot.to_string()},
           {"l_degree_bound", r.l_degree_bound},
           {"m_window", {r.m_window.first, r.m_window.second}},
           {"n_range", {r.n_range.first, r.n_range.second}},
           {"unknowns", r.unknowns},
           {"kernel_dimension", r.kernel_dimension},
           {"witness", r.witness ? json(r.witness->to_string()) : json(nullptr)},
           {"verified_up_to", r.verified_up_to},
           {"witness_exact", r.witness_exact},
           {"note", r.note}};
    if (candidate) j["witness_matches_candidate"] = r.witness && *r.witness == *candidate;
    return j;
}

}  // namespace

CommandResult run_command(const std::function<CommandResult()>& cmd) {
    try {
        return cmd();
    } catch (const OppositeSigns& e) {
        return {kExitOutOfScope, "", std::string("out of scope: ") + e.what() + "\n"};
    } catch (const ParseError& e) {
        return {kExitUsage, "", std::string("parse error: ") + e.what() + "\n"};
    } catch (const InvalidParams& e) {
        return {kExitUsage, "", std::string("invalid parameters: ") + e.what() + "\n"};
    } catch (const Error& e) {
        return {kExitMismatch, "", std::string("error: ") + e.what() + "\n"};
    }
}

std::pair<int, int> parse_window(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("window \"" + text + "\" is not of the form lo:hi");
    try {
        std::size_t used1 = 0, used2 = 0;
        const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
        const int lo = std::stoi(a, &used1), hi = std::stoi(b, &used2);
        if (used1 != a.size() || used2 != b.size()) throw ParseError("trailing characters");
        if (lo > hi) throw ParseError("lo > hi");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ParseError("window \"" + text + "\" is not of the form lo:hi");
    } catch (const ParseError& e) {
        throw ParseError("window \"" + text + "\": " + e.what());
    }
}

void load_jones_cache(JonesSequence& seq) {
    const auto path = cache_file(seq.knot());
    if (!path || !fs::exists(*path)) return;
    std::ifstream in(*path);
    std::string header;
    if (!std::getline(in, header)) return;
    const auto semi = header.rfind(';');
    if (semi == std::string::npos || header.substr(0, semi) != seq.knot().to_string()) {
        throw ParseError("cache file " + path->string() + " does not belong to " + seq.knot().to_string());
    }
    const long count = std::stol(header.substr(semi + 1));
    std::string line;
    for (long n = 1; n <= count && std::getline(in, line); ++n) {
        const auto by_m = parse_laurent(line).by_m();
        if (by_m.size() > 1 || (by_m.size() == 1 && by_m.begin()->first != 0)) {
            throw ParseError("cache file " + path->string() + ": M in J(" + std::to_string(n) + ")");
        }
        seq.preload(n, by_m.empty() ? ULaurent(0) : by_m.begin()->second);
    }
}

void save_jones_cache(const JonesSequence& seq) {
    const auto path = cache_file(seq.knot());
    if (!path) return;
    std::vector<std::string> lines;
    for (const auto& [n, v] : seq.materialized()) {
        if (n < 1) continue;
        if (n != static_cast<long>(lines.size()) + 1) break;  // keep a contiguous prefix
        lines.push_back(v.to_string("t"));
    }
    fs::create_directories(path->parent_path());
    std::ofstream out(*path);
    out << seq.knot().to_string() << ";" << lines.size() << "\n";
    for (const auto& l : lines) out << l << "\n";
}

CommandResult cmd_jones(const std::string& knot, long n_max, Format fmt) {
    if (n_max < 1) return usage_error("--n-max must be at least 1");
    const KnotExpr k = KnotExpr::parse(knot);
    JonesSequence seq(k);
    load_jones_cache(seq);
    CommandResult res;
    json rows = json::array();
    std::ostringstream os;
    os << "J(n) for " << k.to_string() << "\n";
    for (long n = 1; n <= n_max; ++n) {
        const ULaurent j = seq(n);
        // Degree formulas cover J for torus knots and [n] J for sums.
        const ULaurent measured = k.kind == KnotExpr::Kind::Sum ? bracket(n) * j : j;
        json row{{"n", n}, {"value", j.to_string("t")},
                 {"degrees", {measured.lowest_degree(), measured.highest_degree()}}};
        std::string check;
        try {
            const auto pred = degree_bounds(k, n);
            const bool ok = pred.first == measured.lowest_degree() && pred.second == measured.highest_degree();
            row["predicted"] = {pred.first, pred.second};
            check = ok ? "PASS" : "FAIL";
            if (!ok) res.exit_code = kExitMismatch;
        } catch (const UnsupportedSignPattern& e) {
            row["predicted"] = nullptr;
            check = std::string("warning: ") + e.what();
        }
        row["check"] = check;
        rows.push_back(row);
        os << "n = " << n << "  degrees (" << measured.lowest_degree() << ", " << measured.highest_degree() << ")  "
           << check << "\n  " << j.to_string("t") << "\n";
    }
    save_jones_cache(seq);
    res.out = fmt == Format::Json ? dump(json{{"knot", k.to_string()}, {"rows", rows}}) : os.str();
    return res;
}

CommandResult cmd_apoly(const std::string& knot, Format fmt) {
    const KnotExpr k = KnotExpr::parse(knot);
    const APoly a = apoly(k);
    json j{{"knot", k.to_string()}, {"factored", a.factored()}, {"expanded", ml_to_string(a.expansion())}};
    std::ostringstream os;
    os << "A-polynomial of " << k.to_string() << "\n  factored: " << a.factored()
       << "\n  expanded: " << ml_to_string(a.expansion()) << "\n";
    CommandResult res;
    if (k.kind == KnotExpr::Kind::Sum) {
        const APoly general = apoly_sum_general(apoly_torus(k.k1), apoly_torus(k.k2));
        const auto unit = ml_unit_ratio(general.expansion(), a.expansion());
        const bool ok = unit && (unit->first == 1 || unit->first == -1);
        j["case"] = to_string(sum_case(k.k1, k.k2));
        j["general"] = general.factored();
        j["cross_check"] = ok;
        os << "  case (" << to_string(sum_case(k.k1, k.k2)) << ")\n  product construction: " << general.factored()
           << "\n  cross-check: " << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok) res.exit_code = kExitMismatch;
        if ((k.k1.p > 0) != (k.k2.p > 0)) {
            j["note"] = "no annihilator construction in scope";
            os << "  note: no annihilator construction in scope\n";
        }
    }
    res.out = fmt == Format::Json ? dump(j) : os.str();
    return res;
}

CommandResult cmd_verify(const std::string& knot, const VerifyOptions& opt, Format fmt) {
    if (opt.n_max < 1) return usage_error("--n-max must be at least 1");
    const KnotExpr k = KnotExpr::parse(knot);
    if (k.kind != KnotExpr::Kind::Sum) return usage_error("verify expects a connected sum T(p,q)#T(a,b)");
    VerifyOptions o = opt;
    o.jones = std::make_shared<JonesSequence>(k);
    load_jones_cache(*o.jones);
    const AJReport r = verify_sum(k.k1, k.k2, o);
    save_jones_cache(*o.jones);
    CommandResult res;
    res.exit_code = r.passed() ? kExitOk : kExitMismatch;
    res.out = fmt == Format::Json ? dump(to_json(r)) : render_text(r);
    return res;
}

CommandResult cmd_scan(const std::string& knot, int degree, std::optional<std::pair<int, int>> m_window,
                       Format fmt) {
    if (degree < 1) return usage_error("--scan-degree must be at least 1");
    const KnotExpr k = KnotExpr::parse(knot);
    std::optional<SkewOperator> candidate;
    if (k.kind == KnotExpr::Kind::Sum && (k.k1.p > 0) == (k.k2.p > 0)) {
        const CandidateAnnihilator c = build_candidate(k.k1, k.k2);
        candidate = normalize(c.op);
        if (!m_window) m_window = support_m_window(c.op);
    }
    if (!m_window) return usage_error("scan of " + k.to_string() + " needs --m-window lo:hi");
    ScanOptions so;
    so.d = degree;
    so.m_window = *m_window;
    const ScanReport r = minimality_scan(k, so);
    const json j = scan_to_json(r, candidate);
    std::ostringstream os;
    os << "scan of " << k.to_string() << ": L-degree <= " << r.l_degree_bound << ", M^" << r.m_window.first
       << "..M^" << r.m_window.second << ", n = " << r.n_range.first << ".." << r.n_range.second << "\n"
       << "  unknowns:         " << r.unknowns << "\n"
       << "  kernel dimension: " << r.kernel_dimension << " (over Q(t))\n";
    if (r.witness) {
        os << "  witness:          " << r.witness->to_string() << "\n"
           << "  vanishes mod p up to n = " << r.verified_up_to << ", exactly for small n: "
           << (r.witness_exact ? "yes" : "no") << "\n";
        if (candidate) os << "  equals the normalized candidate: " << (*r.witness == *candidate ? "yes" : "no") << "\n";
    }
    if (!r.note.empty()) os << "  " << r.note << "\n";
    return {kExitOk, fmt == Format::Json ? dump(j) : os.str(), ""};
}

CommandResult cmd_selftest(const std::set<int>& criteria, const std::optional<std::string>& golden_dir) {
    CommandResult res;
    std::ostringstream os;
    for (const auto& r : run_acceptance(criteria)) {
        os << format_result(r) << "\n";
        if (!r.pass) res.exit_code = kExitMismatch;
    }
    if (golden_dir) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(*golden_dir)) {
            if (e.path().extension() == ".json") files.push_back(e.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            std::ifstream in(f);
            std::stringstream buf;
            buf << in.rdbuf();
            std::string verdict;
            try {
                const AJReport stored = report_from_json(json::parse(buf.str()));
                const KnotExpr k = KnotExpr::parse(stored.knot);
                VerifyOptions o;
                o.n_max = stored.annihilation_checked_up_to > 0 ? stored.annihilation_checked_up_to : 8;
                const std::string fresh = dump(to_json(verify_sum(k.k1, k.k2, o)));
                verdict = fresh == buf.str() ? "PASS" : "FAIL";
            } catch (const std::exception& e) {
                verdict = std::string("FAIL (") + e.what() + ")";
            }
            if (verdict != "PASS") res.exit_code = kExitMismatch;
            os << verdict << "  golden " << f.filename().string() << "\n";
        }
    }
    res.out = os.str();
    return res;
}

}  // namespace ajt
