// Command-line front end: parse braid words, polynomials, and factorization
// files, run the library operations, and emit stable text or JSON output.
//
// Exit codes: 0 for success and true verdicts, 1 for false verdicts,
// 2 for input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidre/alexander.hpp"
#include "braidre/braid.hpp"
#include "braidre/freegroup.hpp"
#include "braidre/laurent.hpp"
#include "braidre/presentation.hpp"
#include "braidre/realstructure.hpp"

using nlohmann::json;
using namespace braidre;

namespace {

struct Options {
    std::string verb;
    std::vector<std::string> args;
    long seed = 20240801; // reserved for randomized batch modes; fixed default
    std::optional<int> strands;
    bool closure = false;
    bool full = false;
    std::string format = "text";
};

[[noreturn]] void fail(const std::string& message) {
    throw std::invalid_argument(message);
}

int to_int(const std::string& s) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(s, &pos);
    } catch (const std::exception&) {
        fail("expected an integer, got '" + s + "'");
    }
    if (pos != s.size())
        fail("expected an integer, got '" + s + "'");
    return value;
}

const std::string kUsage =
    "usage: braidre <verb> [arguments] [--seed <n>] [--strands <n>] [--closure]\n"
    "               [--full] [--format text|json]\n"
    "verbs:\n"
    "  normalize <poly>               normalized Laurent polynomial\n"
    "  equal <braid> <braid>          braid equality verdict\n"
    "  delta <n>                      half twist on n strands\n"
    "  rev <braid>                    reversed word\n"
    "  rmap <braid>                   mirror s_i -> s_(n-i)\n"
    "  conj <braid> <pairs>           conjugation-induced image of the braid\n"
    "  action <braid> <word>          image of a free word under the braid action\n"
    "  nf <braid>                     left normal form data\n"
    "  conj-delta <braid>             conjugate-to-half-twist verdict\n"
    "  vankampen <braid>...           presentation from a factorization\n"
    "  alexander <braid>...           polynomial of the presentation\n"
    "  burau <braid>                  reduced Burau matrix\n"
    "  closed-form <name> <n>...      hopf | delta-even | delta-odd | milnor-orlik\n"
    "  divides <poly> <poly>          divisibility-up-to-units verdict\n"
    "  multiplicity <factor> <poly>   multiplicity of the factor\n"
    "  verify-real <file|->           factorization decomposition verdict\n"
    "  derive-lower <file|->          lower factors of a factorization\n"
    "  central-eq <braid>             central equation verdict\n"
    "  build-acnode <d> <k>           model factorization with one real block\n"
    "  build-arrangement <r>...       commuting block twists\n";

Options parse_options(int argc, char** argv) {
    Options o;
    std::vector<std::string> positional;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        auto next = [&](const char* what) -> std::string {
            if (i + 1 >= argc)
                fail(std::string("flag ") + what + " needs a value");
            return argv[++i];
        };
        if (arg == "--seed") {
            o.seed = to_int(next("--seed"));
        } else if (arg == "--strands") {
            o.strands = to_int(next("--strands"));
        } else if (arg == "--closure") {
            o.closure = true;
        } else if (arg == "--full") {
            o.full = true;
        } else if (arg == "--format") {
            o.format = next("--format");
            if (o.format != "text" && o.format != "json")
                fail("unknown format '" + o.format + "' (expected text or json)");
        } else if (arg == "--help" || arg == "-h") {
            std::cout << kUsage;
            std::exit(0);
        } else if (arg.rfind("--", 0) == 0) {
            fail("unknown flag '" + arg + "'");
        } else {
            positional.push_back(std::move(arg));
        }
    }
    if (positional.empty())
        fail("missing verb\n" + kUsage);
    o.verb = positional.front();
    o.args.assign(positional.begin() + 1, positional.end());
    return o;
}

void require_args(const Options& o, std::size_t n) {
    if (o.args.size() != n)
        fail("verb '" + o.verb + "' expects " + std::to_string(n) + " argument(s), got " +
             std::to_string(o.args.size()));
}

BraidWord parse_braid_arg(const Options& o, const std::string& text) {
    if (!text.empty() && text[0] == 'B')
        return parse_braid(text);
    if (o.strands)
        return parse_braid("B" + std::to_string(*o.strands) + " " + text);
    return parse_braid(text); // reports the malformed header
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        fail("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit_verdict(const Options& o, bool verdict) {
    if (o.format == "json")
        std::cout << json{{"verdict", verdict}}.dump() << "\n";
    else
        std::cout << (verdict ? "true" : "false") << "\n";
    return verdict ? 0 : 1;
}

int emit_poly(const Options& o, const LaurentPoly& p) {
    if (o.format == "json")
        std::cout << json{{"poly", to_text(p)}}.dump() << "\n";
    else
        std::cout << to_text(p) << "\n";
    return 0;
}

int emit_braid(const Options& o, const BraidWord& b) {
    if (o.format == "json")
        std::cout << json{{"braid", to_text(b)}}.dump() << "\n";
    else
        std::cout << to_text(b) << "\n";
    return 0;
}

int emit_braids(const Options& o, const std::vector<BraidWord>& braids) {
    if (o.format == "json") {
        json list = json::array();
        for (const auto& b : braids)
            list.push_back(to_text(b));
        std::cout << json{{"braids", list}}.dump() << "\n";
    } else {
        for (const auto& b : braids)
            std::cout << to_text(b) << "\n";
    }
    return 0;
}

Presentation presentation_from_args(const Options& o) {
    if (o.closure) {
        require_args(o, 1);
        return link_group(parse_braid_arg(o, o.args[0]));
    }
    std::vector<BraidWord> braids;
    for (const auto& a : o.args)
        braids.push_back(parse_braid_arg(o, a));
    if (braids.empty()) {
        if (!o.strands)
            fail("an empty factorization needs --strands <n>");
        return van_kampen({}, *o.strands);
    }
    return van_kampen(braids);
}

int run_vankampen(const Options& o) {
    Presentation p = presentation_from_args(o);
    if (o.format == "json") {
        json relators = json::array();
        for (const auto& r : p.relators)
            relators.push_back(to_text(r));
        std::cout << json{{"gens", p.generators}, {"relators", relators}}.dump() << "\n";
    } else {
        std::cout << to_text(p);
    }
    return 0;
}

int run_alexander(const Options& o) {
    AlexanderResult r = alexander_poly(presentation_from_args(o));
    if (o.format == "json") {
        json out{{"poly", to_text(r.polynomial)}};
        if (o.full) {
            json divisors = json::array();
            for (const auto& d : r.elementary_divisors)
                divisors.push_back(to_text(d));
            out["divisors"] = divisors;
            out["free"] = r.free_rank_flag;
        }
        std::cout << out.dump() << "\n";
    } else if (o.full) {
        std::cout << to_text(r);
    } else {
        std::cout << to_text(r.polynomial) << "\n";
    }
    return 0;
}

int run_nf(const Options& o) {
    require_args(o, 1);
    BraidWord b = parse_braid_arg(o, o.args[0]);
    NormalForm nf = left_normal_form(b);
    std::string word = to_text(normal_form_word(nf));
    if (o.format == "json") {
        std::cout << json{{"inf", nf.inf},
                          {"sup", nf.sup()},
                          {"len", nf.canonical_length()},
                          {"word", word}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "inf: " << nf.inf << "\n";
        std::cout << "sup: " << nf.sup() << "\n";
        std::cout << "len: " << nf.canonical_length() << "\n";
        std::cout << "word: " << word << "\n";
    }
    return 0;
}

int run_burau(const Options& o) {
    require_args(o, 1);
    LaurentMatrix m = burau_reduced(parse_braid_arg(o, o.args[0]));
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& row : m) {
            json r = json::array();
            for (const auto& e : row)
                r.push_back(to_text(e));
            rows.push_back(r);
        }
        std::cout << json{{"matrix", rows}}.dump() << "\n";
    } else {
        for (const auto& row : m) {
            std::cout << "[";
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j)
                    std::cout << ", ";
                std::cout << to_text(row[j]);
            }
            std::cout << "]\n";
        }
    }
    return 0;
}

int run_closed_form(const Options& o) {
    if (o.args.empty())
        fail("closed-form needs a family name (hopf, delta-even, delta-odd, milnor-orlik)");
    const std::string& name = o.args[0];
    if (name == "hopf") {
        require_args(o, 2);
        return emit_poly(o, hopf_link(to_int(o.args[1])));
    }
    if (name == "delta-even") {
        require_args(o, 2);
        return emit_poly(o, delta_closure_even(to_int(o.args[1])));
    }
    if (name == "delta-odd") {
        require_args(o, 2);
        return emit_poly(o, delta_closure_odd(to_int(o.args[1])));
    }
    if (name == "milnor-orlik") {
        require_args(o, 3);
        return emit_poly(o, milnor_orlik(to_int(o.args[1]), to_int(o.args[2])));
    }
    fail("unknown closed form '" + name + "'");
}

int run_build_acnode(const Options& o) {
    require_args(o, 2);
    RealFactorization f = build_acnode(to_int(o.args[0]), to_int(o.args[1]));
    if (o.format == "json") {
        json upper = json::array(), real = json::array();
        for (const auto& b : f.upper)
            upper.push_back(to_text(b));
        for (const auto& b : f.real)
            real.push_back(to_text(b));
        std::cout << json{{"strands", f.strands},
                          {"fiber_real_points", f.fiber.real_points()},
                          {"upper", upper},
                          {"real", real}}
                         .dump()
                  << "\n";
    } else {
        std::cout << to_text(f);
    }
    return 0;
}

int dispatch(const Options& o) {
    if (o.verb == "normalize") {
        require_args(o, 1);
        return emit_poly(o, normalize(parse_laurent(o.args[0])));
    }
    if (o.verb == "equal") {
        require_args(o, 2);
        return emit_verdict(o, equals(parse_braid_arg(o, o.args[0]), parse_braid_arg(o, o.args[1])));
    }
    if (o.verb == "delta") {
        int n = 0;
        if (o.args.size() == 1)
            n = to_int(o.args[0]);
        else if (o.args.empty() && o.strands)
            n = *o.strands;
        else
            fail("delta needs a strand count (positional or --strands)");
        return emit_braid(o, delta(n));
    }
    if (o.verb == "rev") {
        require_args(o, 1);
        return emit_braid(o, rev(parse_braid_arg(o, o.args[0])));
    }
    if (o.verb == "rmap") {
        require_args(o, 1);
        return emit_braid(o, rmap(parse_braid_arg(o, o.args[0])));
    }
    if (o.verb == "conj") {
        require_args(o, 2);
        BraidWord b = parse_braid_arg(o, o.args[0]);
        return emit_braid(o, conj_bar(b, ConjParams(b.strands, to_int(o.args[1]))));
    }
    if (o.verb == "action") {
        require_args(o, 2);
        BraidWord b = parse_braid_arg(o, o.args[0]);
        FreeWord w = parse_free_word(b.strands, o.args[1]);
        std::string image = to_text(artin_action(b, w));
        if (o.format == "json")
            std::cout << json{{"word", image}}.dump() << "\n";
        else
            std::cout << image << "\n";
        return 0;
    }
    if (o.verb == "nf")
        return run_nf(o);
    if (o.verb == "conj-delta") {
        require_args(o, 1);
        return emit_verdict(o, conjugate_to_delta(parse_braid_arg(o, o.args[0])));
    }
    if (o.verb == "vankampen")
        return run_vankampen(o);
    if (o.verb == "alexander")
        return run_alexander(o);
    if (o.verb == "burau")
        return run_burau(o);
    if (o.verb == "closed-form")
        return run_closed_form(o);
    if (o.verb == "divides") {
        require_args(o, 2);
        return emit_verdict(o, divides_up_to_units(parse_laurent(o.args[0]), parse_laurent(o.args[1])));
    }
    if (o.verb == "multiplicity") {
        require_args(o, 2);
        int m = multiplicity_of_factor(parse_laurent(o.args[0]), parse_laurent(o.args[1]));
        if (o.format == "json")
            std::cout << json{{"multiplicity", m}}.dump() << "\n";
        else
            std::cout << m << "\n";
        return 0;
    }
    if (o.verb == "verify-real") {
        require_args(o, 1);
        return emit_verdict(o, verify_decomposition(parse_real_factorization(read_input(o.args[0]))));
    }
    if (o.verb == "derive-lower") {
        require_args(o, 1);
        return emit_braids(o, derive_lower(parse_real_factorization(read_input(o.args[0]))));
    }
    if (o.verb == "central-eq") {
        require_args(o, 1);
        return emit_verdict(o, check_central_equation(parse_braid_arg(o, o.args[0])));
    }
    if (o.verb == "build-acnode")
        return run_build_acnode(o);
    if (o.verb == "build-arrangement") {
        if (o.args.empty())
            fail("build-arrangement needs at least one group size");
        std::vector<int> r;
        for (const auto& a : o.args)
            r.push_back(to_int(a));
        return emit_braids(o, build_unreal_arrangement(r));
    }
    fail("unknown verb '" + o.verb + "'\n" + kUsage);
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(parse_options(argc, argv));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
