#include "sylvsum/cli.hpp"

#include "sylvsum/apery.hpp"
#include "sylvsum/arithprog.hpp"
#include "sylvsum/errors.hpp"
#include "sylvsum/lambda_spec.hpp"
#include "sylvsum/oracle.hpp"
#include "sylvsum/serialize.hpp"
#include "sylvsum/sylvester.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <variant>

namespace sylvsum::cli {

namespace {

using nlohmann::json;
using IntList = std::vector<std::int64_t>;

enum class Choice { automatic, apery, closed_form, oracle };

struct Options {
    std::string gens;
    std::string ap;
    std::string lambda;
    std::string method = "auto";
    std::string format = "text";
    std::vector<unsigned> mus;
    bool numeric = false;
    std::optional<std::size_t> embedding;
};

std::int64_t parse_int(const std::string& text, const char* what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw std::invalid_argument(std::string(what) + ": expected an integer, got '" + text + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        out.push_back(item);
    }
    return out;
}

// Validated generators plus the progression view when one applies.
struct Input {
    Generators gens;
    std::optional<ArithProgression> ap;
};

Input resolve_input(const Options& o) {
    if (o.gens.empty() == o.ap.empty()) {
        throw std::invalid_argument("give exactly one of --gens or --ap");
    }
    if (!o.gens.empty()) {
        IntList values;
        for (const std::string& item : split(o.gens, ',')) values.push_back(parse_int(item, "--gens"));
        Generators g(std::move(values));
        return {g, ArithProgression::detect(g)};
    }
    std::map<std::string, std::int64_t> kv;
    for (const std::string& item : split(o.ap, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--ap expects a=..,d=..,k=..");
        kv[item.substr(0, eq)] = parse_int(item.substr(eq + 1), "--ap");
    }
    if (kv.size() != 3 || !kv.count("a") || !kv.count("d") || !kv.count("k")) {
        throw std::invalid_argument("--ap expects exactly a=..,d=..,k=..");
    }
    ArithProgression ap(kv["a"], kv["d"], kv["k"]);
    return {ap.generators(), ap};
}

Choice parse_choice(const std::string& s) {
    if (s == "auto") return Choice::automatic;
    if (s == "apery") return Choice::apery;
    if (s == "closed-form") return Choice::closed_form;
    if (s == "oracle") return Choice::oracle;
    throw std::invalid_argument("unknown method '" + s + "'");
}

// Everything derived from the input once, before any parallel evaluation.
class Context {
public:
    explicit Context(Input in) : input_(std::move(in)), table_(apery_general(input_.gens)) {}

    const Input& input() const { return input_; }
    const AperyTable& table() const { return table_; }
    const GapSet& gaps() {
        if (!gaps_) gaps_ = gap_set(input_.gens);
        return *gaps_;
    }
    const GapSet& gaps() const { return *gaps_; }
    const ArithProgression& require_ap() const {
        if (!input_.ap) {
            throw std::invalid_argument("closed-form needs generators in arithmetic progression "
                                        "a, a+d, ..., a+(k-1)d with gcd(a,d) = 1 and 2 <= k <= a");
        }
        return *input_.ap;
    }

private:
    Input input_;
    AperyTable table_;
    std::optional<GapSet> gaps_;
};

Choice effective(Choice c, const Context& ctx) {
    if (c != Choice::automatic) return c;
    return ctx.input().ap ? Choice::closed_form : Choice::apery;
}

// Least representable value per residue, read off the sieved gaps: within a
// class every gap lies below m_i, so m_i = (largest gap in the class) + a1.
AperyTable apery_from_gaps(const GapSet& gs, std::int64_t a1) {
    AperyTable t{a1, IntList(static_cast<std::size_t>(a1))};
    for (std::int64_t i = 0; i < a1; ++i) t.m[static_cast<std::size_t>(i)] = i;
    for (std::int64_t g : gs.gaps) t.m[static_cast<std::size_t>(g % a1)] = g + a1;
    return t;
}

IntList gaps_from_table(const AperyTable& t) {
    IntList out;
    for (std::int64_t m : t.m) {
        for (std::int64_t n = m - t.modulus; n > 0; n -= t.modulus) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Tagged<AperyTable> compute_apery(const Context& ctx, Choice c) {
    switch (effective(c, ctx)) {
    case Choice::closed_form: return {apery_arith(ctx.require_ap()), Method::ap_closed_form};
    case Choice::oracle: return {apery_from_gaps(ctx.gaps(), ctx.input().gens.smallest()), Method::oracle};
    default: return {ctx.table(), Method::general_apery};
    }
}

Tagged<std::int64_t> compute_frobenius(const Context& ctx, Choice c) {
    switch (effective(c, ctx)) {
    case Choice::closed_form: return {frobenius_ap(ctx.require_ap()), Method::ap_closed_form};
    case Choice::oracle: return {oracle_frobenius(ctx.gaps()), Method::oracle};
    default: return {frobenius(ctx.table()), Method::general_apery};
    }
}

Tagged<BigInt> compute_genus(const Context& ctx, Choice c) {
    switch (effective(c, ctx)) {
    case Choice::closed_form: return {genus_ap(ctx.require_ap()), Method::ap_closed_form};
    case Choice::oracle: return {oracle_genus(ctx.gaps()), Method::oracle};
    default: return {genus(ctx.table()), Method::general_apery};
    }
}

Tagged<BigInt> compute_power_sum(const Context& ctx, Choice c, unsigned mu) {
    switch (effective(c, ctx)) {
    case Choice::closed_form: return {power_sum_ap(ctx.require_ap(), mu), Method::ap_closed_form};
    case Choice::oracle: return {oracle_power_sum(ctx.gaps(), mu), Method::oracle};
    default: return {power_sum(ctx.table(), mu), Method::general_apery};
    }
}

Tagged<RingElement> compute_weighted(const Context& ctx, Choice c, unsigned mu, const RingElement& lambda) {
    switch (effective(c, ctx)) {
    case Choice::closed_form: return weighted_sum_ap(ctx.require_ap(), mu, lambda);
    case Choice::oracle: return {oracle_weighted_sum(ctx.gaps(), mu, lambda), Method::oracle};
    default: return weighted_sum(ctx.table(), mu, lambda);
    }
}

Tagged<IntList> compute_gaps(const Context& ctx, Choice c) {
    switch (effective(c, ctx)) {
    case Choice::oracle: return {ctx.gaps().gaps, Method::oracle};
    case Choice::closed_form: return {gaps_from_table(apery_arith(ctx.require_ap())), Method::ap_closed_form};
    default: return {gaps_from_table(ctx.table()), Method::general_apery};
    }
}

using Value = std::variant<std::int64_t, BigInt, IntList, RingElement>;

struct Record {
    std::string label; // e.g. "s_1"
    json query;
    Method method;
    Value value;
    std::optional<Embedding> embedding;
};

std::string text_of(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(x);
            } else if constexpr (std::is_same_v<T, BigInt>) {
                return to_string(x);
            } else if constexpr (std::is_same_v<T, IntList>) {
                std::string s = "[";
                for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + std::to_string(x[i]);
                return s + "]";
            } else {
                std::string s = x.format("t");
                if (x.ring().degree() > 1) s += "  in " + x.ring().describe();
                return s;
            }
        },
        v);
}

json json_of(const Value& v) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(x);
            } else if constexpr (std::is_same_v<T, BigInt>) {
                return to_json(x);
            } else if constexpr (std::is_same_v<T, IntList>) {
                json arr = json::array();
                for (std::int64_t n : x) arr.push_back(std::to_string(n));
                return arr;
            } else {
                return to_json(x);
            }
        },
        v);
}

Value as_value(const AperyTable& t) { return t.m; }
template <typename T>
Value as_value(const T& v) { return v; }

class Printer {
public:
    Printer(std::ostream& out, const Options& o, const Generators& g)
        : out_(out), json_(o.format == "json"), numeric_(o.numeric) {
        for (std::int64_t v : g.values()) gens_.push_back(v);
    }

    void emit(const Record& r) {
        std::optional<std::complex<double>> approx;
        const auto* elem = std::get_if<RingElement>(&r.value);
        if (numeric_ && elem && r.embedding) approx = numeric_eval(*elem, *r.embedding);
        if (json_) {
            json j{{"generators", gens_}, {"query", r.query}, {"method", to_string(r.method)},
                   {"value", json_of(r.value)}};
            if (approx) j["numeric"] = {{"re", approx->real()}, {"im", approx->imag()}};
            out_ << j.dump() << '\n';
            return;
        }
        out_ << r.label << " = " << text_of(r.value) << "    (" << to_string(r.method) << ")";
        if (approx) {
            std::ostringstream s;
            s.precision(15);
            s << approx->real() << (approx->imag() < 0 ? " - " : " + ") << std::abs(approx->imag()) << "i";
            out_ << "    ~ " << s.str();
        }
        out_ << '\n';
    }

private:
    std::ostream& out_;
    bool json_;
    bool numeric_;
    json gens_ = json::array();
};

std::vector<unsigned> sorted_unique(std::vector<unsigned> mus, std::vector<unsigned> fallback) {
    if (mus.empty()) mus = std::move(fallback);
    std::sort(mus.begin(), mus.end());
    mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
    return mus;
}

// Evaluates f(mu) for every mu concurrently; results come back in mu order.
template <typename F>
auto per_mu(const std::vector<unsigned>& mus, F f) {
    using R = decltype(f(0u));
    std::vector<std::future<R>> jobs;
    for (unsigned mu : mus) jobs.push_back(std::async(std::launch::async, f, mu));
    std::vector<R> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

json base_query(const std::string& command) { return json{{"command", command}}; }

struct WeightInput {
    RingElement value;
    LambdaSpec spec;
    Embedding embedding;
};

WeightInput read_weight(const Options& o) {
    if (o.lambda.empty()) throw std::invalid_argument("--lambda is required");
    LambdaSpec spec = parse_lambda_spec(o.lambda);
    RingElement value = lambda_value(spec);
    Embedding emb = o.embedding ? Embedding::index(*o.embedding) : default_embedding(spec);
    return {value, spec, emb};
}

int run_power_sums(Context& ctx, Choice choice, const std::vector<unsigned>& mus, Printer& p,
                   const std::string& command) {
    if (effective(choice, ctx) == Choice::oracle) ctx.gaps();
    const Context& shared = ctx;
    auto results = per_mu(mus, [&](unsigned mu) { return compute_power_sum(shared, choice, mu); });
    for (std::size_t i = 0; i < mus.size(); ++i) {
        json q = base_query(command);
        q["mu"] = mus[i];
        p.emit({"s_" + std::to_string(mus[i]), q, results[i].method, results[i].value, std::nullopt});
    }
    return exit_ok;
}

int run_weighted(Context& ctx, Choice choice, const Options& o, Printer& p, std::ostream& err) {
    const WeightInput w = read_weight(o);
    if (w.value.is_zero()) throw std::invalid_argument("weight must be nonzero");
    const std::vector<unsigned> mus = sorted_unique(o.mus, {1});
    if (w.value.is_one()) {
        err << "note: lambda = 1 is the unweighted case; reporting power-sum instead\n";
        return run_power_sums(ctx, choice, mus, p, "power-sum");
    }
    if (mus.front() == 0) throw std::invalid_argument("weighted sums need --mu >= 1");
    if (effective(choice, ctx) == Choice::oracle) ctx.gaps();
    const Context& shared = ctx;
    auto results = per_mu(mus, [&](unsigned mu) { return compute_weighted(shared, choice, mu, w.value); });
    for (std::size_t i = 0; i < mus.size(); ++i) {
        json q = base_query("weighted-sum");
        q["mu"] = mus[i];
        q["lambda"] = w.spec.text;
        p.emit({"s_" + std::to_string(mus[i]) + "^(" + w.spec.text + ")", q, results[i].method,
                results[i].value, w.embedding});
    }
    return exit_ok;
}

// Runs every applicable route per quantity and compares.
int run_verify(Context& ctx, const Options& o, std::ostream& out, std::ostream& err) {
    ctx.gaps();
    const bool as_json = o.format == "json";
    const bool has_ap = ctx.input().ap.has_value();
    std::vector<Choice> routes{Choice::apery};
    if (has_ap) routes.push_back(Choice::closed_form);
    routes.push_back(Choice::oracle);

    json checks = json::array();
    bool all_ok = true;
    auto check = [&](const std::string& quantity, auto&& compute) {
        std::vector<std::pair<std::string, std::string>> seen;
        json values = json::object();
        for (Choice c : routes) {
            std::string text;
            std::string method;
            try {
                auto r = compute(c);
                method = std::string(to_string(r.method));
                text = text_of(as_value(r.value));
            } catch (const consistency_error& e) {
                method = c == Choice::closed_form ? "ap-closed-form" : "general-apery";
                text = std::string("internal disagreement: ") + e.what();
            }
            seen.emplace_back(method, text);
            values[method] = text;
        }
        const bool agree = std::all_of(seen.begin(), seen.end(),
                                       [&](const auto& s) { return s.second == seen.front().second; });
        all_ok = all_ok && agree;
        if (as_json) {
            checks.push_back({{"quantity", quantity}, {"values", values}, {"agree", agree}});
        } else {
            out << (agree ? "ok       " : "MISMATCH ") << quantity << " = " << seen.front().second;
            if (!agree) {
                for (const auto& [m, v] : seen) out << "\n    " << m << ": " << v;
            } else {
                out << "    (";
                for (std::size_t i = 0; i < seen.size(); ++i) out << (i ? ", " : "") << seen[i].first;
                out << ")";
            }
            out << '\n';
        }
    };

    const Context& c = ctx;
    check("apery", [&](Choice ch) { return compute_apery(c, ch); });
    check("g", [&](Choice ch) { return compute_frobenius(c, ch); });
    check("n", [&](Choice ch) { return compute_genus(c, ch); });
    const std::vector<unsigned> mus = sorted_unique(o.mus, {1, 2, 3});
    for (unsigned mu : mus) {
        check("s_" + std::to_string(mu), [&](Choice ch) { return compute_power_sum(c, ch, mu); });
    }
    std::string lambda_text;
    if (!o.lambda.empty()) {
        const WeightInput w = read_weight(o);
        lambda_text = w.spec.text;
        if (w.value.is_zero()) throw std::invalid_argument("weight must be nonzero");
        if (w.value.is_one()) {
            err << "note: lambda = 1 is the unweighted case; weighted checks skipped\n";
        } else {
            for (unsigned mu : mus) {
                if (mu == 0) continue;
                check("s_" + std::to_string(mu) + "^(" + w.spec.text + ")",
                      [&](Choice ch) { return compute_weighted(c, ch, mu, w.value); });
            }
        }
    }
    if (as_json) {
        json gens = json::array();
        for (std::int64_t v : ctx.input().gens.values()) gens.push_back(v);
        json q = base_query("verify");
        q["mu"] = mus;
        if (!lambda_text.empty()) q["lambda"] = lambda_text;
        out << json{{"generators", gens}, {"query", q}, {"checks", checks}, {"ok", all_ok}}.dump() << '\n';
    }
    return all_ok ? exit_ok : exit_disagreement;
}

int dispatch(const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
    const Choice choice = parse_choice(o.method);
    Context ctx(resolve_input(o));
    if (command == "verify") return run_verify(ctx, o, out, err);

    Printer printer(out, o, ctx.input().gens);
    if (choice == Choice::oracle) ctx.gaps();
    if (command == "apery") {
        auto r = compute_apery(ctx, choice);
        printer.emit({"m", base_query(command), r.method, r.value.m, std::nullopt});
    } else if (command == "frobenius") {
        auto r = compute_frobenius(ctx, choice);
        printer.emit({"g", base_query(command), r.method, r.value, std::nullopt});
    } else if (command == "genus") {
        auto r = compute_genus(ctx, choice);
        printer.emit({"n", base_query(command), r.method, r.value, std::nullopt});
    } else if (command == "gaps") {
        auto r = compute_gaps(ctx, choice);
        printer.emit({"NR", base_query(command), r.method, r.value, std::nullopt});
    } else if (command == "power-sum") {
        return run_power_sums(ctx, choice, sorted_unique(o.mus, {1}), printer, command);
    } else if (command == "weighted-sum") {
        return run_weighted(ctx, choice, o, printer, err);
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frobenius numbers, genus and (weighted) power sums over numerical semigroup gaps"};
    app.require_subcommand(1);
    Options o;
    std::size_t embedding_index = 0;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"apery", "minimal residue system m_0..m_{a1-1}"},
        {"frobenius", "largest gap"},
        {"genus", "number of gaps"},
        {"power-sum", "sum of n^mu over the gaps"},
        {"weighted-sum", "sum of lambda^n n^mu over the gaps"},
        {"gaps", "list the gaps"},
        {"verify", "run every method and check that they agree"},
    };
    std::string chosen;
    CLI::Option* embedding_opt = nullptr;
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--gens", o.gens, "generators, e.g. 13,16,19,22,25");
        sub->add_option("--ap", o.ap, "arithmetic progression, e.g. a=13,d=3,k=5");
        sub->add_option("--mu", o.mus, "power (repeatable)")->take_all();
        sub->add_option("--lambda", o.lambda, "weight: p/q | root(n,p/q) | zeta(n) | elem(minpoly=[..];coeffs=[..])");
        sub->add_option("--method", o.method, "auto | apery | closed-form | oracle")
            ->check(CLI::IsMember({"auto", "apery", "closed-form", "oracle"}));
        sub->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--numeric", o.numeric, "append a floating-point preview of ring values");
        CLI::Option* e = sub->add_option("--embedding", embedding_index,
                                         "root index of the modulus used by --numeric");
        sub->callback([&chosen, &embedding_opt, e, name = name] {
            chosen = name;
            embedding_opt = e;
        });
    }

    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }
    if (embedding_opt && embedding_opt->count() > 0) o.embedding = embedding_index;

    try {
        return dispatch(chosen, o, out, err);
    } catch (const consistency_error& e) {
        err << "error: methods disagree: " << e.what() << '\n';
        return exit_disagreement;
    } catch (const numeric_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

} // namespace sylvsum::cli
