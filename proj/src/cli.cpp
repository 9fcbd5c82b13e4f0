#include "delliptic/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "delliptic/covers.hpp"
#include "delliptic/errors.hpp"
#include "delliptic/json_io.hpp"
#include "delliptic/loci.hpp"
#include "delliptic/qmod.hpp"
#include "delliptic/verify.hpp"

namespace delliptic::cli {

using json_io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Output {
    bool json = false;
    std::string path;
};

std::string fit_str(const qmod::FitResult& f) {
    if (!f.ok()) {
        const auto& r = f.refutation();
        return "not quasimodular (weight <= " + std::to_string(r.max_weight) + ", order " + std::to_string(r.order) +
               ")";
    }
    if (f.combination().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.combination()) {
        const std::string name = m.str();
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const Rational mag = c.sign() < 0 ? -c : c;
        if (name == "1") os << mag.str();
        else if (mag == Rational(1)) os << name;
        else os << mag.str() << '*' << name;
        first = false;
    }
    return os.str();
}

std::string series_str(const QSeries& s) {
    std::string out;
    for (std::size_t i = 0; i < s.coefficients().size(); ++i) out += (i ? ", " : "") + s[i].str();
    return out;
}

// Prints text (or the JSON document with --json) and, with --out, writes the JSON document.
void emit(const Output& o, std::ostream& out, const std::string& text, const Json& doc) {
    if (o.json) out << doc.dump(2) << '\n';
    else out << text;
    if (!o.path.empty()) {
        std::ofstream f(o.path, std::ios::binary);
        if (!f) throw PreconditionError("cannot write " + o.path);
        f << doc.dump(2) << '\n';
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact d-elliptic locus classes on moduli of genus-2 and genus-3 curves", "delliptic"};
    app.require_subcommand(1);
    app.fallthrough();

    Output o;
    app.add_flag("--json", o.json, "Print JSON instead of text");
    app.add_option("--out", o.path, "Also write the JSON document to this path");

    std::string family_name, label, count_kind;
    std::int64_t d = 0, max_d = 10;
    std::size_t order = 30;
    unsigned weight = 6;
    std::string series_arg, in_path;
    std::vector<std::string> profiles, injections;

    auto* cls = app.add_subcommand("class", "Class of the d-elliptic locus in the Q-class basis");
    cls->add_option("family", family_name, "m2, m2e, m21 or m3")->required();
    cls->add_option("--d", d, "Degree of the cover")->required();

    auto* ser = app.add_subcommand("series", "Coefficient generating series and its quasimodular fit");
    ser->add_option("family", family_name, "m2, m2e, m21 or m3")->required();
    ser->add_option("label", label, "Q-class label, e.g. delta_0 or kappa_2")->required();
    ser->add_option("--N", order, "Truncation order");
    ser->add_option("--weight", weight, "Maximal quasimodular weight");

    auto* fit = app.add_subcommand("qmod-fit", "Fit a series given as a JSON array of coefficients");
    fit->add_option("series", series_arg, "JSON array, constant term first");
    fit->add_option("--in", in_path, "Read the JSON array from a file");
    fit->add_option("--N", order, "Number of coefficients to match (defaults to the series order)");
    fit->add_option("--weight", weight, "Maximal quasimodular weight");

    auto* hur = app.add_subcommand("hurwitz", "Hurwitz number by enumeration of permutation tuples");
    hur->add_option("--d", d, "Degree")->required();
    hur->add_option("--profile", profiles, "Branch profile such as 3,1,1 (repeat per branch point)")->required();

    auto* cnt = app.add_subcommand("count", "Cover and isogeny counts");
    cnt->add_option("kind", count_kind, "sublattices, pointed-isogenies, dd22 or dd2222")
        ->required()
        ->check(CLI::IsMember({"sublattices", "pointed-isogenies", "dd22", "dd2222"}));
    cnt->add_option("--d", d, "Degree")->required();

    auto* ver = app.add_subcommand("verify", "Run the full verification suite");
    ver->add_option("--max-d", max_d, "Largest degree in the class sweeps");
    ver->add_option("--N", order, "Order of the quasimodular certification");
    ver->add_option("--weight", weight, "Maximal quasimodular weight");
    ver->add_option("--inject-pairing", injections, "Overwrite a pairing entry, SPACE:A:B:VALUE (fault injection)");

    for (auto* sub : {cls, ser, fit, hur, cnt, ver}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }

    const auto& reg = chow::Registry::builtin();
    try {
        if (*cls) {
            const auto f = loci::parse_family(family_name);
            if (d < 1) throw PreconditionError("--d must be >= 1");
            const auto c = loci::family_class(f, d, reg);
            emit(o, out, c.str(reg) + "\n",
                 json_io::envelope("class", Json{{"family", loci::to_string(f)}, {"d", d}, {"class", json_io::to_json(reg, c)}}));
        } else if (*ser) {
            const auto f = loci::parse_family(family_name);
            const auto s = loci::coefficient_series(f, label, order, reg);
            const auto r = qmod::fit(s, weight, order);
            emit(o, out, "series: " + series_str(s) + "\nfit: " + fit_str(r) + "\n",
                 json_io::envelope("series", Json{{"family", loci::to_string(f)},
                                                  {"label", label},
                                                  {"N", order},
                                                  {"weight", weight},
                                                  {"series", json_io::to_json(s)},
                                                  {"fit", json_io::to_json(r)}}));
        } else if (*fit) {
            if (series_arg.empty() == in_path.empty())
                throw PreconditionError("give the series either inline or with --in, not both");
            const std::string text = in_path.empty() ? series_arg : read_file(in_path);
            Json j;
            try {
                j = Json::parse(text);
            } catch (const Json::parse_error& e) {
                throw PreconditionError(std::string("series is not valid JSON: ") + e.what());
            }
            const QSeries s = json_io::series_from_json(j);
            const std::size_t n = fit->count("--N") ? order : s.order();
            const auto r = qmod::fit(s, weight, n);
            emit(o, out, fit_str(r) + "\n",
                 json_io::envelope("qmod-fit", Json{{"N", n}, {"weight", weight}, {"fit", json_io::to_json(r)}}));
        } else if (*hur) {
            std::vector<covers::Partition> parts;
            Json pj = Json::array();
            for (const auto& p : profiles) {
                parts.push_back(covers::Partition::parse(p));
                pj.push_back(parts.back().str());
            }
            if (d > INT32_MAX) throw PreconditionError("--d is out of range");
            const auto h = covers::hurwitz_number(static_cast<int>(d), parts);
            emit(o, out, h.str() + "\n",
                 json_io::envelope("hurwitz", Json{{"d", d}, {"profiles", pj}, {"value", h.str()}}));
        } else if (*cnt) {
            if (d < 1) throw PreconditionError("--d must be >= 1");
            Integer v;
            if (count_kind == "sublattices") v = covers::count_sublattices(d);
            else if (count_kind == "pointed-isogenies") v = covers::count_pointed_isogenies(d);
            else if (count_kind == "dd22") v = covers::count_dd22(d);
            else v = covers::count_dd2222_g2(d);
            emit(o, out, v.get_str() + "\n",
                 json_io::envelope("count", Json{{"quantity", count_kind}, {"d", d}, {"value", v.get_str()}}));
        } else if (*ver) {
            verify::Options opts;
            opts.max_d = max_d;
            opts.order = order;
            opts.weight = weight;
            opts.inject_pairings = injections;
            const auto report = verify::run(opts);
            std::ostringstream text;
            for (const auto& c : report.checks) {
                if (c.ok) text << "ok    " << c.name << '\n';
                else text << "FAIL  " << c.name << ": " << c.detail << '\n';
            }
            if (report.ok) text << "all checks passed\n";
            else text << "first failure: " << *report.first_failure << '\n';
            emit(o, out, text.str(), report.json);
            if (!report.ok) err << "verify failed: " << *report.first_failure << '\n';
            return report.ok ? kOk : kFailure;
        }
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CrossCheckFailure& e) {
        err << "cross-check failed: " << e.what() << '\n';
        return kFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kOk;
}

} // namespace delliptic::cli
