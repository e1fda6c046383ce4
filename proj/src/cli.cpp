#include "tla/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tla/classifier.hpp"
#include "tla/dynkin.hpp"
#include "tla/error.hpp"
#include "tla/invring.hpp"
#include "tla/moments.hpp"
#include "tla/repr.hpp"
#include "tla/verify.hpp"

namespace tla {
namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;
constexpr int kBadParams = 3;
constexpr int kNotWeight = 4;
constexpr int kInsufficient = 5;
constexpr int kUnsupported = 6;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("Io", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) fail("Io", "cannot write " + out_path);
    f << text;
}

std::vector<Scalar> parse_alphas(const std::string& csv) {
    std::vector<Scalar> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) fail("BadParam", "empty entry in --alphas");
        out.push_back(Scalar::parse(item));
    }
    return out;
}

// Tensor module realizing the given parameters: one spherical one-dimensional
// (or so3) factor per nu weight at the fixed points +-1, and one smallest
// faithful evaluation factor per alpha.
TensorModule parameter_module(CaseKind kind, const SynthParams& p) {
    std::vector<EvalModule> factors;
    switch (kind) {
        case CaseKind::DeltaA1:
            for (const Scalar& a : p.alphas)
                factors.push_back(
                    make_eval_module(kind, build_irrep_sl2sl2(1, 0), a, EvalFlavor::FullG));
            break;
        case CaseKind::A1:
            for (const Scalar& a : p.alphas)
                factors.push_back(
                    make_eval_module(kind, build_irrep_sl2(1), a, EvalFlavor::FullG));
            break;
        case CaseKind::AI1:
            factors.push_back(make_eval_module(kind, build_irrep_k_abelian(p.nu1), Scalar(1),
                                               EvalFlavor::KOnly));
            factors.push_back(make_eval_module(kind, build_irrep_k_abelian(p.nu_1), Scalar(-1),
                                               EvalFlavor::KOnly));
            for (const Scalar& a : p.alphas)
                factors.push_back(
                    make_eval_module(kind, build_irrep_sl2(1), a, EvalFlavor::FullG));
            break;
        case CaseKind::AI2:
            factors.push_back(make_eval_module(kind, build_irrep_k_so3(p.nu1), Scalar(1),
                                               EvalFlavor::KOnly));
            factors.push_back(make_eval_module(kind, build_irrep_k_so3(p.nu_1), Scalar(-1),
                                               EvalFlavor::KOnly));
            for (const Scalar& a : p.alphas)
                factors.push_back(make_eval_module(kind, build_irrep_sl3_fundamental(), a,
                                                   EvalFlavor::FullG));
            break;
    }
    return make_tensor_module(kind, std::move(factors));
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::FiniteDimensional: return kOk;
        case Verdict::NotFiniteDimensional: return kRejected;
        case Verdict::InsufficientData: return kInsufficient;
        case Verdict::UnsupportedField: return kUnsupported;
    }
    return kUsage;
}

int run_verify(const std::string& suite, const SuiteBounds& b, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
    const std::vector<std::string> names = suite_names();
    if (suite == "all") {
        std::vector<SuiteReport> rs;
        for (const std::string& nm : names) rs.push_back(run_suite(nm, b));
        emit(suite_reports_json(rs), out_path, out);
        bool ok = std::all_of(rs.begin(), rs.end(),
                              [](const SuiteReport& r) { return r.all_pass(); });
        return ok ? kOk : kRejected;
    }
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        err << "unknown suite \"" << suite << "\"; expected one of all";
        for (const std::string& nm : names) err << ", " << nm;
        err << "\n";
        return kUsage;
    }
    SuiteReport r = run_suite(suite, b);
    emit(suite_report_json(r), out_path, out);
    return r.all_pass() ? kOk : kRejected;
}

int run_evalmod(CaseKind kind, const SynthParams& p, bool nu_given, long a_max,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
    try {
        if (a_max < 0) fail("BadParam", "--amax must be nonnegative");
        if (nu_given && (kind == CaseKind::DeltaA1 || kind == CaseKind::A1))
            fail("BadParam", "nu weights apply to the cases AI1 and AI2 only");
        TensorModule m = parameter_module(kind, p);
        MomentFile f;
        f.data = highest_weight_functional(m, a_max);
        emit(moment_file_json(f), out_path, out);
        return kOk;
    } catch (const Error& e) {
        err << e.kind() << ": " << e.what() << "\n";
        return e.kind() == "NotWeightVector" ? kNotWeight : kBadParams;
    }
}

int run_classify(const std::string& in_path, const std::string& case_override,
                 const std::string& out_path, std::ostream& out, std::ostream& err) {
    try {
        MomentFile f = parse_moment_file(slurp(in_path));
        if (!case_override.empty()) {
            if (f.general)
                fail("Schema", "/case: a general file does not take a case override");
            f.data.kind = case_kind_from_tag(case_override);
        }
        ClassificationResult res = classify_moment_file(f);
        emit(classification_json(res), out_path, out);
        return verdict_exit(res.verdict);
    } catch (const Error& e) {
        err << e.kind() << ": " << e.what() << "\n";
        return kUsage;
    }
}

// Point-recovery input: {"kind": "Int"|"Nat"|"NatPair", "n": int,
// "values": [{"word": [letter...], "value": "scalar"}]}.  Letters are
// integers, or [a, b] pairs for NatPair.
MonoidElem letter_at(MonoidKind mk, const json& v, const std::string& where) {
    auto bad = [&](const std::string& msg) { fail("Schema", where + ": " + msg); };
    if (mk == MonoidKind::NatPair) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
            !v[1].is_number_integer())
            bad("expected a [a, b] integer pair");
        long a = v[0].get<long>(), b = v[1].get<long>();
        if (a < 0 || b < 0) bad("pair letters must be nonnegative");
        return MonoidElem::of_pair(a, b);
    }
    if (!v.is_number_integer()) bad("expected an integer letter");
    long a = v.get<long>();
    if (mk == MonoidKind::Nat && a < 0) bad("letters must be nonnegative");
    return mk == MonoidKind::Int ? MonoidElem::of_int(a) : MonoidElem::of_nat(a);
}

json word_json(MonoidKind mk, const Word& w) {
    json arr = json::array();
    for (const MonoidElem& m : w) {
        if (mk == MonoidKind::NatPair)
            arr.push_back(json::array({m.x, m.y}));
        else
            arr.push_back(m.x);
    }
    return arr;
}

int run_invring(const std::string& in_path, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
    try {
        json j;
        try {
            j = json::parse(slurp(in_path));
        } catch (const json::parse_error& e) {
            fail("Schema", std::string(": ") + e.what());
        }
        if (!j.is_object()) fail("Schema", ": expected a JSON object");
        if (!j.contains("kind") || !j["kind"].is_string())
            fail("Schema", "/kind: expected \"Int\", \"Nat\" or \"NatPair\"");
        std::string ks = j["kind"].get<std::string>();
        MonoidKind mk;
        if (ks == "Int") mk = MonoidKind::Int;
        else if (ks == "Nat") mk = MonoidKind::Nat;
        else if (ks == "NatPair") mk = MonoidKind::NatPair;
        else fail("Schema", "/kind: unknown monoid \"" + ks + "\"");
        if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long>() < 1)
            fail("Schema", "/n: expected a positive integer");
        int n = j["n"].get<int>();
        if (!j.contains("values") || !j["values"].is_array())
            fail("Schema", "/values: expected an array");
        std::map<Word, Scalar> data;
        for (std::size_t i = 0; i < j["values"].size(); ++i) {
            const json& entry = j["values"][i];
            std::string where = "/values/" + std::to_string(i);
            if (!entry.is_object() || !entry.contains("word") || !entry.contains("value") ||
                !entry["word"].is_array() || !entry["value"].is_string())
                fail("Schema", where + ": expected {\"word\": [...], \"value\": \"p/q\"}");
            Word w;
            for (const json& v : entry["word"]) w.push_back(letter_at(mk, v, where + "/word"));
            data[w] = Scalar::parse(entry["value"].get<std::string>());
        }
        SolveResult sr = solve_points(mk, n, data);
        json res;
        switch (sr.status) {
            case SolveStatus::Ok: res["status"] = "ok"; break;
            case SolveStatus::InsufficientData: res["status"] = "insufficient_data"; break;
            case SolveStatus::RelationViolated: res["status"] = "relation_violated"; break;
            case SolveStatus::UnsupportedField: res["status"] = "unsupported_field"; break;
        }
        json pts = json::array();
        for (const Point& p : sr.points) {
            json coords = json::array();
            for (const Scalar& c : p) coords.push_back(scalar_json(c));
            pts.push_back(coords);
        }
        res["points"] = pts;
        if (sr.status == SolveStatus::RelationViolated)
            res["violated"] = word_json(mk, sr.violated);
        if (!sr.detail.empty()) res["detail"] = sr.detail;
        emit(res.dump(2) + "\n", out_path, out);
        switch (sr.status) {
            case SolveStatus::Ok: return kOk;
            case SolveStatus::InsufficientData: return kInsufficient;
            case SolveStatus::RelationViolated: return kRejected;
            case SolveStatus::UnsupportedField: return kUnsupported;
        }
        return kUsage;
    } catch (const Error& e) {
        err << e.kind() << ": " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"twisted loop algebras of the second kind: identity verification, "
                 "moment extraction, finite-dimensionality classification"};
    app.name("tla");
    long field_d = 2;
    app.add_option("--field-d", field_d,
                   "squarefree discriminant of the quadratic scalar field extension")
        ->capture_default_str();

    std::string suite = "all", out_path;
    SuiteBounds bounds;
    CLI::App* verify = app.add_subcommand("verify", "run a property suite, report JSON");
    verify->add_option("--suite", suite, "suite name or \"all\"")->capture_default_str();
    verify->add_option("--rmax", bounds.rmax, "word-length bound")->capture_default_str();
    verify->add_option("--n", bounds.n, "invariant-ring point bound")->capture_default_str();
    verify->add_option("--output", out_path, "write the report here instead of stdout");

    std::string case_tag_in, nu1_s = "0", nu_1_s = "0", alphas_s;
    long a_max = 12;
    CLI::App* evalmod =
        app.add_subcommand("evalmod", "build a tensor module and extract its moment window");
    evalmod->add_option("--case", case_tag_in, "DeltaA1, A1, AI1 or AI2")->required();
    auto* nu1_opt = evalmod->add_option("--nu1", nu1_s, "weight at the fixed point 1");
    auto* nu_1_opt = evalmod->add_option("--nu-1", nu_1_s, "weight at the fixed point -1");
    evalmod->add_option("--alphas", alphas_s, "comma-separated evaluation points");
    evalmod->add_option("--amax", a_max, "moment window bound")->capture_default_str();
    evalmod->add_option("--output", out_path, "write the moment file here instead of stdout");

    std::string in_path, case_override;
    CLI::App* classify =
        app.add_subcommand("classify", "decide finite-dimensionality of a moment file");
    classify->add_option("--input", in_path, "moment JSON file")->required();
    classify->add_option("--case", case_override, "override the file's case tag");
    classify->add_option("--output", out_path, "write the result here instead of stdout");

    CLI::App* invring =
        app.add_subcommand("invring", "recover a point multiset from invariant values");
    invring->add_option("--input", in_path, "sampled values JSON file")->required();
    invring->add_option("--output", out_path, "write the result here instead of stdout");

    int table_l = 8;
    CLI::App* dynkin = app.add_subcommand("dynkin", "dump the involution rows table");
    dynkin->add_option("--n", table_l, "maximal diagram rank")->capture_default_str();

    app.require_subcommand(1);
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        Scalar::set_field_d(field_d);
        if (verify->parsed()) return run_verify(suite, bounds, out_path, out, err);
        if (evalmod->parsed()) {
            CaseKind kind = case_kind_from_tag(case_tag_in);
            SynthParams p;
            p.nu1 = Scalar::parse(nu1_s);
            p.nu_1 = Scalar::parse(nu_1_s);
            if (!alphas_s.empty()) p.alphas = parse_alphas(alphas_s);
            bool nu_given = nu1_opt->count() > 0 || nu_1_opt->count() > 0;
            return run_evalmod(kind, p, nu_given, a_max, out_path, out, err);
        }
        if (classify->parsed()) return run_classify(in_path, case_override, out_path, out, err);
        if (invring->parsed()) return run_invring(in_path, out_path, out, err);
        if (dynkin->parsed()) {
            out << rows_table(table_l);
            return kOk;
        }
    } catch (const Error& e) {
        err << e.kind() << ": " << e.what() << "\n";
        return e.kind() == "UnknownSuite" ? kUsage : kBadParams;
    }
    err << "no subcommand\n";
    return kUsage;
}

} // namespace tla
