#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "records.hpp"
#include "suite.hpp"
#include "twistlab/minuscule.hpp"

using namespace twistlab;
using namespace twistlab::cli;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCap = 3 };

struct UsageError : Error {
    using Error::Error;
};

struct TypeFlags {
    std::string family;
    int rank = 0;
};

void add_type(CLI::App* app, TypeFlags& t, bool required = true) {
    auto* f = app->add_option("--family", t.family, "Cartan family (A-G)");
    auto* r = app->add_option("--rank", t.rank, "rank");
    if (required) {
        f->required();
        r->required();
    }
}

CartanDatum cartan_of(const TypeFlags& t) {
    if (t.family.size() != 1 || !valid_type(t.family[0], t.rank)) throw UsageError("invalid Cartan type " + t.family + std::to_string(t.rank));
    return build_cartan(t.family[0], t.rank);
}

long default_cap() {
    const char* env = std::getenv("TWISTLAB_CAP");
    if (!env || !*env) return 10000;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end || v <= 0) throw UsageError(std::string("TWISTLAB_CAP must be a positive integer, got '") + env + "'");
    return v;
}

long resolve_cap(long flag) {
    if (flag == 0) return default_cap();
    if (flag < 0) throw UsageError("--cap must be positive");
    return flag;
}

std::vector<int> ints(const std::string& s) {
    std::vector<int> out;
    for (long v : parse_list(s)) out.push_back(static_cast<int>(v));
    return out;
}

Vec vec(const std::string& s) {
    auto v = parse_list(s);
    return Vec(v.begin(), v.end());
}

std::vector<int> complement(const CartanDatum& c, int t) {
    if (t < 1 || t > c.rank) throw UsageError("node " + std::to_string(t) + " out of range");
    std::vector<int> J;
    for (int i = 1; i <= c.rank; ++i)
        if (i != t) J.push_back(i);
    return J;
}

// --- element input shared by apply and orbit ---

struct ElementFlags {
    TypeFlags type;
    std::string word, coset, pbw, str, shape, record;
    int t = 0;
};

void add_element(CLI::App* app, ElementFlags& e) {
    add_type(app, e.type, false);
    app->add_option("--word", e.word, "reduced word, comma-separated");
    app->add_option("--coset", e.coset, "J for the word of x_J, comma-separated (\"\" for the empty set)");
    app->add_option("--t", e.t, "minuscule index; the word is the diagram reading word");
    app->add_option("--pbw", e.pbw, "PBW datum");
    app->add_option("--str", e.str, "string datum");
    app->add_option("--shape", e.shape, "partition in the minuscule diagram (needs --t)");
    app->add_option("--record", e.record, "element record JSON file, '-' for standard input");
}

struct Element {
    CartanDatum cartan;
    Word word;
    Vec pbw;
};

json read_json(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open " + path);
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

Element resolve_element(CLI::App* app, const ElementFlags& e) {
    int inputs = static_cast<int>(app->count("--pbw") + app->count("--str") + app->count("--shape") + app->count("--record"));
    if (inputs != 1) throw UsageError("give exactly one of --pbw, --str, --shape, --record");
    if (app->count("--record")) {
        if (app->count("--word") + app->count("--coset") + app->count("--t")) throw UsageError("--record carries its own word");
        ElementRecord r = element_from_json(read_json(e.record));
        auto c = build_cartan(r.family, r.rank);
        return {c, r.word, r.pbw};
    }
    if (!app->count("--family") || !app->count("--rank")) throw UsageError("--family and --rank are required");
    auto c = cartan_of(e.type);
    int sources = static_cast<int>(app->count("--word") + app->count("--coset") + app->count("--t"));
    if (sources != 1) throw UsageError("give exactly one of --word, --coset, --t");
    Element out{c, {}, {}};
    std::optional<MinusculeContext> mc;
    if (app->count("--word")) {
        out.word = ints(e.word);
        for (int x : out.word)
            if (x < 1 || x > c.rank) throw UsageError("letter " + std::to_string(x) + " out of range");
        if (!is_reduced(c, out.word)) throw UsageError("word " + word_str(out.word) + " is not reduced");
    } else if (app->count("--coset")) {
        out.word = coset_longest(c, ints(e.coset));
    } else {
        mc = minuscule_context(c.family, c.rank, e.t);
        out.word = mc->word;
    }
    TwistContext ctx(c, out.word);
    if (app->count("--pbw")) {
        out.pbw = vec(e.pbw);
    } else if (app->count("--str")) {
        Vec s = vec(e.str);
        if (s.size() != out.word.size()) throw UsageError("string datum length does not match the word");
        out.pbw = ctx.psi_inv(s);
    } else {
        if (!mc) throw UsageError("--shape needs --t");
        out.pbw = p_vector(*mc, make_shape(*mc, ints(e.shape)));
    }
    if (out.pbw.size() != out.word.size()) throw UsageError("PBW datum length does not match the word");
    return out;
}

ElementRecord make_record(const TwistContext& ctx, const Vec& raw, bool canonicalize) {
    const CartanDatum& c = ctx.cartan();
    ElementRecord r{c.family, c.rank, ctx.word(), raw, {}, false, Vec(c.rank, 0)};
    if (canonicalize) {
        r.pbw = ctx.canonical(raw);
        r.canonical = true;
        std::vector<char> seen(c.rank + 1, 0);
        for (std::size_t k = 0; k < raw.size(); ++k) {
            int j = ctx.word()[k];
            if (!seen[j]) {
                seen[j] = 1;
                r.frozen_shift[j - 1] = raw[k] - r.pbw[k];
            }
        }
    }
    r.str = ctx.psi(r.pbw);
    return r;
}

// --- commands ---

struct ApplyFlags {
    ElementFlags el;
    long power = 1;
    bool raw = false;
};

int cmd_apply(CLI::App* app, const ApplyFlags& f) {
    Element e = resolve_element(app, f.el);
    TwistContext ctx(e.cartan, e.word);
    Vec out = ctx.power(e.pbw, f.power);
    std::cout << to_json(make_record(ctx, out, !f.raw)).dump() << "\n";
    return kOk;
}

struct OrbitFlags {
    ElementFlags el;
    long cap = 0;
    int show = 20;
};

int cmd_orbit(CLI::App* app, const OrbitFlags& f) {
    Element e = resolve_element(app, f.el);
    long cap = resolve_cap(f.cap);
    TwistContext ctx(e.cartan, e.word);
    Vec start = ctx.canonical(e.pbw);
    json steps = json::array();
    steps.push_back(to_json(make_record(ctx, start, true)));
    std::optional<long> period;
    Vec cur = start;
    for (long k = 1; k <= cap; ++k) {
        cur = ctx.canonical(ctx.forward(cur));
        if (cur == start) {
            period = k;
            break;
        }
        if (k < f.show) steps.push_back(to_json(make_record(ctx, cur, true)));
    }
    json out{{"cartan", {{"family", std::string(1, e.cartan.family)}, {"rank", e.cartan.rank}}},
             {"word", e.word},
             {"period", period ? json(*period) : json(inf_token(cap))},
             {"cap", cap},
             {"orbit", steps}};
    std::cout << out.dump() << "\n";
    return kOk;
}

struct PeriodFlags {
    TypeFlags type;
    std::string coset, word;
    int t = 0, coxeter = 0, threads = 0;
    long cap = 0;
};

int cmd_period(CLI::App* app, const PeriodFlags& f) {
    auto c = cartan_of(f.type);
    long cap = resolve_cap(f.cap);
    int sources = static_cast<int>(app->count("--coset") + app->count("--word") + app->count("--minuscule-t") + app->count("--coxeter-power"));
    if (sources != 1) throw UsageError("give exactly one of --coset, --word, --minuscule-t, --coxeter-power");
    PeriodRecord rec{c.family, c.rank, std::nullopt, {}, std::nullopt, cap, {}};
    PeriodResult res;
    if (app->count("--coset") || app->count("--minuscule-t")) {
        std::vector<int> J = app->count("--coset") ? ints(f.coset) : complement(c, f.t);
        std::sort(J.begin(), J.end());
        rec.J = J;
        rec.word = coset_longest(c, J);
        res = parabolic_period(c, J, cap, f.threads);
    } else {
        rec.word = app->count("--word") ? ints(f.word) : coxeter_power_word(c, f.coxeter);
        for (int x : rec.word)
            if (x < 1 || x > c.rank) throw UsageError("letter " + std::to_string(x) + " out of range");
        if (!is_reduced(c, rec.word)) throw UsageError("word " + word_str(rec.word) + " is not reduced");
        auto miss = missing_support(c, rec.word);
        if (!miss.empty()) throw UsageError("supp(w) misses node " + std::to_string(miss.front()));
        res = TwistContext(c, rec.word).period(cap, f.threads);
    }
    rec.value = res.value;
    rec.xi = res.xi;
    std::cout << to_json(rec).dump() << "\n";
    return kOk;
}

struct TablesFlags {
    TypeFlags type;
    int rank_max = 0, threads = 0;
    long cap = 0;
};

std::vector<std::vector<int>> subsets_by_size(int n) {
    std::vector<std::vector<int>> out;
    for (int size = 0; size <= n; ++size) {
        std::vector<int> J(size);
        for (int k = 0; k < size; ++k) J[k] = k + 1;
        while (true) {
            out.push_back(J);
            int k = size - 1;
            while (k >= 0 && J[k] == n - size + k + 1) --k;
            if (k < 0) break;
            ++J[k];
            for (int m = k + 1; m < size; ++m) J[m] = J[m - 1] + 1;
        }
    }
    return out;
}

int cmd_tables(const TablesFlags& f) {
    long cap = resolve_cap(f.cap);
    int lo = f.type.rank, hi = f.rank_max ? f.rank_max : f.type.rank;
    if (hi < lo) throw UsageError("--rank-max is below --rank");
    for (int r = lo; r <= hi; ++r) cartan_of({f.type.family, r});
    int nt = f.threads > 0 ? f.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::cout << "J\tPD\tcap\txi_list\n";
    for (int r = lo; r <= hi; ++r) {
        auto c = build_cartan(f.type.family[0], r);
        if (hi > lo) std::cout << "# " << c.family << r << "\n";
        auto sets = subsets_by_size(r);
        std::vector<std::string> rows(sets.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t k; (k = next.fetch_add(1)) < sets.size();) {
                auto res = parabolic_period(c, sets[k], cap, 1);
                std::string xi;
                for (std::size_t m = 0; m < res.xi.size(); ++m) xi += (m ? "," : "") + period_token(res.xi[m], cap);
                rows[k] = join({sets[k].begin(), sets[k].end()}) + "\t" + period_token(res.value, cap) + "\t" + std::to_string(cap) + "\t" + xi;
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < std::min<int>(nt, static_cast<int>(sets.size())); ++t) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
        for (const auto& row : rows) std::cout << row << "\n";
    }
    return kOk;
}

struct MinusculeFlags {
    TypeFlags type;
    int t = 0;
    std::string shape, rect;
};

int cmd_minuscule(CLI::App* app, const MinusculeFlags& f) {
    auto c = cartan_of(f.type);
    auto mc = minuscule_context(c.family, c.rank, f.t);
    TwistContext ctx(mc.cartan, mc.word);
    std::cout << "type " << c.family << c.rank << ", t = " << f.t << ", N = " << mc.N() << "\n";
    std::cout << "reading word " << word_str(mc.word) << "\n";
    Shape outer = make_shape(mc, mc.outer);
    std::cout << "residues of the maximal shape " << shape_str(outer) << ":\n" << render_shape(mc, outer);
    std::cout << all_shapes(mc).size() << " shapes\n";
    if (app->count("--shape")) {
        Shape s = make_shape(mc, ints(f.shape));
        Vec p = p_vector(mc, s);
        Vec img = ctx.twist_string_image(p);
        std::cout << "\nshape " << shape_str(s) << (s.special ? " (special)" : "") << ":\n" << render_shape(mc, s);
        std::cout << "weight (roots)    " << vec_str(shape_weight(mc, s)) << "\n";
        std::cout << "orbit weight      " << vec_str(orbit_weight(mc, s)) << "\n";
        for (const auto& piece : decompose(mc, s)) std::cout << "piece             " << vec_str(piece.weight) << " (" << piece.boxes.size() << " boxes)\n";
        std::cout << "s-vector          " << vec_str(s_vector(mc, s)) << "\n";
        std::cout << "p-vector          " << vec_str(p) << "\n";
        std::cout << "twist image -MNp  " << vec_str(img) << "\n";
        for (const auto& other : all_shapes(mc))
            if (ctx.equiv_string(img, s_vector(mc, other))) std::cout << "twist image shape " << shape_str(other) << " (up to frozen)\n";
        if (ctx.equiv(ctx.forward(p), Vec(mc.N(), 0))) std::cout << "twist image is frozen-trivial\n";
    }
    if (app->count("--rect")) {
        auto v = ints(f.rect);
        if (v.size() != 4) throw UsageError("--rect takes a,b,c,d");
        Rect r{v[0], v[1], v[2], v[3]};
        if (!rect_in_gamma(mc, r)) throw UsageError(rect_str(r) + " is not in the rectangle family");
        Rect img = rect_apply(mc, r);
        std::cout << "\n" << rect_str(r) << " " << vec_str(rect_vector(mc, r)) << "\n" << render_rect(mc, r);
        std::cout << "twist -> " << rect_str(img) << " " << vec_str(rect_vector(mc, img)) << "\n" << render_rect(mc, img);
    }
    return kOk;
}

struct PathFlags {
    int n = 0, t = 0, i = 0, j = 0, crossings = 2;
};

int cmd_latticepath(const PathFlags& f) {
    auto L = lattice_path(f.n, f.t, f.i, f.j, f.crossings);
    std::cout << "lattice path (n,t) = (" << f.n << "," << f.t << "), start (" << f.i << "," << f.j << ")\n";
    for (std::size_t k = 0; k < L.points.size(); ++k)
        std::cout << "p" << k << " = (" << L.points[k].first << "," << L.points[k].second << ")  S = " << rect_str(L.S[k])
                  << "  diagonal moves " << L.diagonal_moves[k] << "\n";
    auto cf = path_closed_form(f.n, f.t, f.i, f.j, f.crossings);
    std::cout << "closed form: D = " << cf.D << ", end (" << cf.x << "," << cf.y << "), steps " << cf.e << "\n";
    std::cout << render_path(L);
    return kOk;
}

struct VerifyFlags {
    std::string suite = "all";
    unsigned seed = 7;
};

int cmd_verify(const VerifyFlags& f) {
    int passed = 0, failed = 0;
    for (int id : suite::suite_ids(f.suite)) {
        auto c = suite::run_criterion(id, f.seed);
        for (const auto& ch : c.checks) {
            std::cout << (ch.pass ? "PASS " : "FAIL ") << c.title << ": " << ch.name;
            if (!ch.pass) std::cout << " -- " << ch.detail;
            std::cout << "\n";
            (ch.pass ? passed : failed)++;
        }
    }
    std::cout << passed << " passed, " << failed << " failed\n";
    return failed ? kVerifyFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum twist automorphisms on localized crystals"};
    app.require_subcommand(1);

    ApplyFlags af;
    auto* apply = app.add_subcommand("apply", "apply a power of the twist to one element");
    add_element(apply, af.el);
    apply->add_option("--power", af.power, "exponent k of D^k (negative for the inverse)");
    apply->add_flag("--raw", af.raw, "emit the raw result without canonicalizing");

    OrbitFlags of;
    auto* orbit = app.add_subcommand("orbit", "follow the twist orbit of one element");
    add_element(orbit, of.el);
    orbit->add_option("--cap", of.cap, "iteration cap (default TWISTLAB_CAP or 10000)");
    orbit->add_option("--show", of.show, "number of orbit elements to print");

    PeriodFlags pf;
    auto* period = app.add_subcommand("period", "periodicity of the twist");
    add_type(period, pf.type);
    period->add_option("--coset", pf.coset, "J, comma-separated (\"\" for the empty set)");
    period->add_option("--word", pf.word, "reduced word with full support");
    period->add_option("--minuscule-t", pf.t, "x_t = longest coset representative for I minus {t}");
    period->add_option("--coxeter-power", pf.coxeter, "m for the Coxeter power c^m");
    period->add_option("--cap", pf.cap, "iteration cap (default TWISTLAB_CAP or 10000)");
    period->add_option("--threads", pf.threads, "worker threads, 0 for all cores");

    TablesFlags tf;
    auto* tables = app.add_subcommand("tables", "PD(x_J) for every J, as TSV");
    add_type(tables, tf.type);
    tables->add_option("--rank-max", tf.rank_max, "last rank of a range");
    tables->add_option("--cap", tf.cap, "iteration cap (default TWISTLAB_CAP or 10000)");
    tables->add_option("--threads", tf.threads, "worker threads, 0 for all cores");

    MinusculeFlags mf;
    auto* minus = app.add_subcommand("minuscule", "diagrams, s/p vectors and twist images for a minuscule index");
    add_type(minus, mf.type);
    minus->add_option("--t", mf.t, "minuscule index")->required();
    minus->add_option("--shape", mf.shape, "partition, comma-separated");
    minus->add_option("--rect", mf.rect, "rectangle a,b,c,d (type A)");

    PathFlags lf;
    auto* path = app.add_subcommand("latticepath", "lattice path model of the inverse twist in type A");
    path->add_option("--n", lf.n, "rank")->required();
    path->add_option("--t", lf.t, "minuscule index")->required();
    path->add_option("--i", lf.i, "starting row")->required();
    path->add_option("--j", lf.j, "starting column")->required();
    path->add_option("--crossings", lf.crossings, "number of line crossings to follow");

    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify", "run the example and property suites");
    verify->add_option("--suite", vf.suite, "paper, props or all")->check(CLI::IsMember({"paper", "props", "all"}));
    verify->add_option("--seed", vf.seed, "seed for the randomized properties");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*apply) return cmd_apply(apply, af);
        if (*orbit) return cmd_orbit(orbit, of);
        if (*period) return cmd_period(period, pf);
        if (*tables) return cmd_tables(tf);
        if (*minus) return cmd_minuscule(minus, mf);
        if (*path) return cmd_latticepath(lf);
        if (*verify) return cmd_verify(vf);
    } catch (const NormalizationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
