#include "ajtorus/report.hpp"

#include <sstream>

#include "ajtorus/errors.hpp"

namespace ajt {

using nlohmann::json;

namespace {

json item_to_json(const CertificateItem& it) {
    json j{{"name", it.name}, {"value", it.value}, {"nonzero", it.nonzero}};
    j["stated"] = it.stated ? json(*it.stated) : json(nullptr);
    j["matches_stated"] = it.matches_stated ? json(*it.matches_stated) : json(nullptr);
    return j;
}

CertificateItem item_from_json(const json& j) {
    CertificateItem it;
    it.name = j.at("name").get<std::string>();
    it.value = j.at("value").get<std::string>();
    it.nonzero = j.at("nonzero").get<bool>();
    if (!j.at("stated").is_null()) it.stated = j.at("stated").get<std::string>();
    if (!j.at("matches_stated").is_null()) it.matches_stated = j.at("matches_stated").get<bool>();
    return it;
}

// Linear factors rendered once each, regardless of multiplicity.
std::vector<std::string> render_repeated(std::vector<LinearFactor> fs) {
    for (auto& f : fs) f.multiplicity = 1;
    return render_linear_factors(fs);
}

}  // namespace

bool operator==(const CertificateItem& a, const CertificateItem& b) {
    return a.name == b.name && a.value == b.value && a.nonzero == b.nonzero && a.stated == b.stated &&
           a.matches_stated == b.matches_stated;
}

AJReport verify_sum(const TorusKnot& k1, const TorusKnot& k2, const VerifyOptions& opt) {
    AJReport r;
    r.knot = KnotExpr::sum(k1, k2).to_string();
    const Classification cls = classify(k1, k2);
    r.case_id = to_string(cls.id);
    r.a_polynomial = apoly_sum_lemma(k1, k2).factored();

    std::optional<CandidateAnnihilator> cand;
    try {
        cand = build_candidate(cls.id, cls.k1, cls.k2);
        const auto span = cand->op.l_degree();
        r.l_degree = span.second - span.first;
    } catch (const Error& e) {
        r.failures["build_candidate"] = e.what();
        return r;
    }

    try {
        AnnihilationCheck chk;
        if (opt.jones) {
            JonesSequence* seq = opt.jones.get();
            chk = check_annihilation(cand->op, [seq](long n) { return (*seq)(n); }, 1, opt.n_max,
                                     !opt.strict_denominators);
        } else {
            chk = check_annihilation(*cand, 1, opt.n_max, !opt.strict_denominators);
        }
        r.skipped_n = chk.skipped;
        if (chk.ok) {
            r.annihilation_checked_up_to = opt.n_max;
        } else {
            r.failures["check_annihilation"] = "nonzero residual at n = " + std::to_string(chk.failing_n);
        }
    } catch (const Error& e) {
        r.failures["check_annihilation"] = e.what();
    }

    try {
        AJComparison cmp = evaluate_and_compare(*cand);
        r.alpha_at_minus1 = render_alpha_at_minus1(cmp.alpha_at_minus1);
        r.factors = render_linear_factors(cmp.split.factors);
        if (!cmp.split.complete()) r.factors.push_back(ml_to_string(cmp.split.cofactor));
        r.repeated_factors = render_repeated(cmp.repeated);
        r.squarefree_part = ml_to_string(cmp.squarefree_part);
        r.match = cmp.match;
        r.unit = cmp.unit;
        if (!cmp.match) r.failures["evaluate_and_compare"] = "squarefree part differs from the A-polynomial";
    } catch (const Error& e) {
        r.failures["evaluate_and_compare"] = e.what();
    }

    try {
        MinimalityCertificate cert = build_certificate(cls.id, cls.k1.p, cls.k1.q, cls.k2.p, cls.k2.q);
        r.certificates.verdict = cert.verdict;
        r.certificates.items = cert.items;
        if (!cert.verdict) r.failures["minimality_certificate"] = "a certificate determinant vanishes";
    } catch (const Error& e) {
        r.failures["minimality_certificate"] = e.what();
    }

    if (opt.scan_degree) {
        try {
            ScanOptions so;
            so.d = *opt.scan_degree;
            so.m_window = opt.m_window ? *opt.m_window : support_m_window(cand->op);
            ScanReport sr = minimality_scan(cand->knot(), so);
            r.scan.ran = true;
            r.scan.l_degree_bound = sr.l_degree_bound;
            r.scan.m_window = sr.m_window;
            r.scan.n_range = sr.n_range;
            r.scan.unknowns = sr.unknowns;
            r.scan.kernel_dimension = sr.kernel_dimension;
            if (sr.witness) {
                r.scan.witness = sr.witness->to_string();
                r.scan.witness_matches_candidate = *sr.witness == normalize(cand->op);
            }
            r.scan.verified_up_to = sr.verified_up_to;
            r.scan.witness_exact = sr.witness_exact;
            r.scan.note = sr.note;
        } catch (const Error& e) {
            r.failures["minimality_scan"] = e.what();
        }
    }
    return r;
}

json to_json(const AJReport& r) {
    json certs{{"verdict", r.certificates.verdict}, {"items", json::array()}};
    for (const auto& it : r.certificates.items) certs["items"].push_back(item_to_json(it));
    json scan{{"ran", r.scan.ran},
              {"l_degree_bound", r.scan.l_degree_bound},
              {"m_window", {r.scan.m_window.first, r.scan.m_window.second}},
              {"n_range", {r.scan.n_range.first, r.scan.n_range.second}},
              {"unknowns", r.scan.unknowns},
              {"kernel_dimension", r.scan.kernel_dimension},
              {"witness", r.scan.witness ? json(*r.scan.witness) : json(nullptr)},
              {"witness_matches_candidate", r.scan.witness_matches_candidate},
              {"verified_up_to", r.scan.verified_up_to},
              {"witness_exact", r.scan.witness_exact},
              {"note", r.scan.note}};
    return json{{"knot", r.knot},
                {"case", r.case_id},
                {"l_degree", r.l_degree},
                {"annihilation_checked_up_to", r.annihilation_checked_up_to},
                {"skipped_n", r.skipped_n},
                {"alpha_at_minus1", r.alpha_at_minus1},
                {"factors", r.factors},
                {"repeated_factors", r.repeated_factors},
                {"squarefree_part", r.squarefree_part},
                {"a_polynomial", r.a_polynomial},
                {"match", r.match},
                {"unit", r.unit},
                {"certificates", certs},
                {"scan", scan},
                {"failures", r.failures}};
}

AJReport report_from_json(const json& j) {
    AJReport r;
    r.knot = j.at("knot").get<std::string>();
    r.case_id = j.at("case").get<std::string>();
    r.l_degree = j.at("l_degree").get<int>();
    r.annihilation_checked_up_to = j.at("annihilation_checked_up_to").get<long>();
    r.skipped_n = j.at("skipped_n").get<std::vector<long>>();
    r.alpha_at_minus1 = j.at("alpha_at_minus1").get<std::string>();
    r.factors = j.at("factors").get<std::vector<std::string>>();
    r.repeated_factors = j.at("repeated_factors").get<std::vector<std::string>>();
    r.squarefree_part = j.at("squarefree_part").get<std::string>();
    r.a_polynomial = j.at("a_polynomial").get<std::string>();
    r.match = j.at("match").get<bool>();
    r.unit = j.at("unit").get<std::string>();
    const json& c = j.at("certificates");
    r.certificates.verdict = c.at("verdict").get<bool>();
    for (const auto& it : c.at("items")) r.certificates.items.push_back(item_from_json(it));
    const json& s = j.at("scan");
    r.scan.ran = s.at("ran").get<bool>();
    r.scan.l_degree_bound = s.at("l_degree_bound").get<int>();
    r.scan.m_window = {s.at("m_window").at(0).get<int>(), s.at("m_window").at(1).get<int>()};
    r.scan.n_range = {s.at("n_range").at(0).get<long>(), s.at("n_range").at(1).get<long>()};
    r.scan.unknowns = s.at("unknowns").get<int>();
    r.scan.kernel_dimension = s.at("kernel_dimension").get<int>();
    if (!s.at("witness").is_null()) r.scan.witness = s.at("witness").get<std::string>();
    r.scan.witness_matches_candidate = s.at("witness_matches_candidate").get<bool>();
    r.scan.verified_up_to = s.at("verified_up_to").get<long>();
    r.scan.witness_exact = s.at("witness_exact").get<bool>();
    r.scan.note = s.at("note").get<std::string>();
    r.failures = j.at("failures").get<std::map<std::string, std::string>>();
    return r;
}

std::string render_text(const AJReport& r) {
    std::ostringstream os;
    auto list = [](const std::vector<std::string>& v) {
        if (v.empty()) return std::string("(none)");
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
        return s;
    };
    os << "knot:              " << r.knot << "\n"
       << "case:              " << r.case_id << "\n"
       << "L-degree:          " << r.l_degree << "\n"
       << "annihilates J(n):  n = 1.." << r.annihilation_checked_up_to << "\n";
    if (!r.skipped_n.empty()) {
        std::vector<std::string> ns;
        for (long n : r.skipped_n) ns.push_back(std::to_string(n));
        os << "  skipped after a denominator collapse: n = " << list(ns) << "\n";
    }
    os << "linear factors:    " << list(r.factors) << "\n"
       << "repeated factors:  " << list(r.repeated_factors) << "\n"
       << "squarefree part:   " << r.squarefree_part << "\n"
       << "A-polynomial:      " << r.a_polynomial << "\n"
       << "match:             " << (r.match ? "yes" : "no") << " (unit " << r.unit << ")\n"
       << "certificates:      " << (r.certificates.verdict ? "nonzero" : "FAILED") << "\n";
    for (const auto& it : r.certificates.items) {
        os << "  " << it.name << " = " << it.value << (it.nonzero ? "" : "  [vanishes]");
        if (it.matches_stated) os << (*it.matches_stated ? "  [closed form ok]" : "  [closed form differs]");
        os << "\n";
    }
    if (r.scan.ran) {
        os << "scan:              d = " << r.scan.l_degree_bound << ", M^" << r.scan.m_window.first << "..M^"
           << r.scan.m_window.second << ", n = " << r.scan.n_range.first << ".." << r.scan.n_range.second << ", "
           << r.scan.unknowns << " unknowns, kernel dimension " << r.scan.kernel_dimension << "\n";
        if (r.scan.witness) {
            os << "  witness " << (r.scan.witness_matches_candidate ? "equals" : "differs from")
               << " the normalized candidate; exact for small n: " << (r.scan.witness_exact ? "yes" : "no") << "\n";
        }
        if (!r.scan.note.empty()) os << "  " << r.scan.note << "\n";
    }
    for (const auto& [stage, msg] : r.failures) os << "FAILED " << stage << ": " << msg << "\n";
    os << "alpha(-1, M, L):   " << r.alpha_at_minus1 << "\n";
    return os.str();
}

}  // namespace ajt
