#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "torsionlink/isometry.hpp"
#include "torsionlink/json_io.hpp"
#include "torsionlink/linking.hpp"
#include "torsionlink/oracle.hpp"
#include "torsionlink/snf.hpp"

using namespace torsionlink;
using json_io::json;

namespace {

std::string read_input(const std::string& path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError("cannot read " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

json homology_to_json(const HomologyPresentation& hp) {
    json j;
    json factors = json::array();
    for (const BigInt& d : hp.group.invariant_factors) factors.push_back(d.get_str());
    j["invariant_factors"] = std::move(factors);
    j["free_rank"] = hp.free_rank;
    return j;
}

std::string group_str(const FiniteAbelianGroup& g, std::size_t free_rank) {
    std::string s;
    for (const BigInt& d : g.invariant_factors) {
        if (!s.empty()) s += " (+) ";
        s += "Z/" + d.get_str();
    }
    if (free_rank > 0) {
        if (!s.empty()) s += " (+) ";
        s += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    }
    return s.empty() ? "trivial" : s;
}

void print_aligned(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const auto& row : cells)
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j >= width.size()) width.push_back(0);
            width[j] = std::max(width[j], row[j].size());
        }
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            std::cout << "  ";
            std::cout.width(static_cast<std::streamsize>(width[j]));
            std::cout << row[j];
        }
        std::cout << "\n";
    }
    std::cout.width(0);
}

void print_matrix_table(const IntMatrix& m) {
    std::cout << m.rows() << "x" << m.cols() << " matrix\n";
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) cells[i][j] = m(i, j).get_str();
    print_aligned(cells);
}

void print_form_table(const LinkingForm& f) {
    std::cout << "H1 = " << group_str(f.group, 0) << "\n";
    if (f.group.is_trivial()) return;
    std::cout << "linking form (SNF generators):\n";
    std::vector<std::vector<std::string>> cells(f.gram.size(),
                                                std::vector<std::string>(f.gram.size()));
    for (std::size_t i = 0; i < f.gram.size(); ++i)
        for (std::size_t j = 0; j < f.gram.size(); ++j) cells[i][j] = f.gram[i][j].str();
    print_aligned(cells);
}

struct LensArgs {
    std::string p, q;
    std::string emit = "form";
    std::string format = "json";
};

void cmd_lens(const LensArgs& a) {
    Gluing g = lens_gluing(parse_bigint(a.p), parse_bigint(a.q));
    if (a.emit == "matrix") {
        if (a.format == "table")
            print_matrix_table(g.matrix());
        else
            print_json(json_io::matrix_to_json(g.matrix()));
    } else if (a.emit == "homology") {
        HomologyPresentation hp = homology(g);
        if (a.format == "table")
            std::cout << "H1 = " << group_str(hp.group, hp.free_rank) << "\n";
        else
            print_json(homology_to_json(hp));
    } else {
        LinkingForm f = linking_form(g);
        if (a.format == "table")
            print_form_table(f);
        else
            print_json(json_io::form_to_json(f));
    }
}

struct LinkingArgs {
    std::string matrix_path;
    std::string format = "json";
};

void cmd_linking(const LinkingArgs& a) {
    IntMatrix m = json_io::matrix_from_json(json_io::parse(read_input(a.matrix_path)));
    LinkingForm f = linking_form(validate_gluing(m));
    if (a.format == "table")
        print_form_table(f);
    else
        print_json(json_io::form_to_json(f));
}

struct IsometricArgs {
    std::string form1, form2;
    std::string cap; // empty = default / env
    std::string format = "json";
};

void cmd_isometric(const IsometricArgs& a) {
    LinkingForm f1 = json_io::form_from_json(json_io::parse(read_input(a.form1)));
    LinkingForm f2 = json_io::form_from_json(json_io::parse(read_input(a.form2)));
    IsometryOptions opts;
    if (!a.cap.empty()) {
        opts.cap = parse_bigint(a.cap);
    } else if (const char* env = std::getenv("TORSIONLINK_CAP")) {
        opts.cap = parse_bigint(env);
    }
    IsometryWitness w = isometric(f1, f2, opts);
    if (a.format == "table") {
        std::cout << "isometric: " << (w.found() ? "yes" : "no") << "\n";
        if (w.found() && w.matrix->rows() > 0) {
            std::cout << "witness (columns = generator images):\n";
            print_matrix_table(*w.matrix);
        }
        return;
    }
    json j;
    j["isometric"] = w.found();
    j["witness"] = json_io::witness_to_json(w);
    print_json(j);
}

struct CorpusArgs {
    std::size_t genus = 1;
    std::size_t twists = 0;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    bool check = false;
};

void corpus_checks(const Gluing& g, const HomologyPresentation& hp, bool qhs) {
    validate_gluing(g.matrix());
    IntMatrix bt = g.block_b().transpose();
    SNFResult snf = smith_normal_form(bt);
    if (snf.U * bt * snf.V != snf.D) throw Error("corpus check failed: U*B^T*V != D");
    if (abs(det(snf.U)) != 1 || abs(det(snf.V)) != 1)
        throw Error("corpus check failed: transformation not unimodular");
    if (!qhs) return;
    BigInt detb = abs(det(g.block_b()));
    if (hp.group.order() != detb) throw Error("corpus check failed: |H1| != |det B|");
    LinkingForm f = linking_form(g);
    for (std::size_t i = 0; i < f.gram.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (f.gram[i][j] != f.gram[j][i]) throw Error("corpus check failed: gram not symmetric");
    if (detb <= 2000) {
        oracle::BruteLinkingTable t = oracle::brute_linking_form(g);
        if (BigInt(static_cast<unsigned long>(t.reps.size())) != detb)
            throw Error("corpus check failed: oracle rep count");
        std::vector<std::vector<BigInt>> coords;
        coords.reserve(t.reps.size());
        for (const auto& rep : t.reps) coords.push_back(snf_coordinates(hp, rep));
        for (std::size_t x = 0; x < t.reps.size(); ++x)
            for (std::size_t y = 0; y < t.reps.size(); ++y)
                if (evaluate(f, coords[x], coords[y]) != t.table[x][y])
                    throw Error("corpus check failed: oracle table disagrees with gram");
    }
}

void cmd_corpus(const CorpusArgs& a) {
    for (std::size_t i = 0; i < a.count; ++i) {
        std::uint64_t s = a.seed + static_cast<std::uint64_t>(i);
        Gluing g = random_gluing(a.genus, a.twists, s);
        bool qhs = is_rational_homology_sphere(g);
        HomologyPresentation hp = homology(g);
        json rec;
        rec["index"] = i;
        rec["genus"] = a.genus;
        rec["twists"] = a.twists;
        rec["seed"] = std::to_string(s);
        rec["matrix"] = json_io::matrix_to_json(g.matrix());
        rec["qhs"] = qhs;
        rec["homology"] = homology_to_json(hp);
        rec["form"] = qhs ? json_io::form_to_json(linking_form(g)) : json(nullptr);
        if (a.check) {
            corpus_checks(g, hp, qhs);
            rec["check"] = "ok";
        }
        print_json(rec);
    }
}

struct OracleArgs {
    std::string mode;
    std::string matrix_path;
};

// debugging backdoor, hidden from --help
void cmd_oracle(const OracleArgs& a) {
    IntMatrix m = json_io::matrix_from_json(json_io::parse(read_input(a.matrix_path)));
    if (a.mode == "cokernel") {
        json reps = json::array();
        for (const auto& rep : oracle::brute_cokernel(m)) {
            json r = json::array();
            for (const BigInt& v : rep) r.push_back(v.get_str());
            reps.push_back(std::move(r));
        }
        json j;
        j["reps"] = std::move(reps);
        print_json(j);
        return;
    }
    if (a.mode == "table") {
        oracle::BruteLinkingTable t = oracle::brute_linking_form(validate_gluing(m));
        json j;
        json reps = json::array();
        for (const auto& rep : t.reps) {
            json r = json::array();
            for (const BigInt& v : rep) r.push_back(v.get_str());
            reps.push_back(std::move(r));
        }
        j["reps"] = std::move(reps);
        json table = json::array();
        for (const auto& row : t.table) {
            json r = json::array();
            for (const QmodZ& v : row) r.push_back(v.str());
            table.push_back(std::move(r));
        }
        j["table"] = std::move(table);
        print_json(j);
        return;
    }
    throw ParseError("oracle mode must be cokernel or table");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsionlink: homology and torsion linking forms of Heegaard gluings"};
    app.require_subcommand(1);

    LensArgs lens_args;
    CLI::App* lens = app.add_subcommand("lens", "lens-space gluing L(p,q) and its invariants");
    lens->add_option("p", lens_args.p, "order of H1")->required();
    lens->add_option("q", lens_args.q, "twisting parameter, coprime to p")->required();
    lens->add_option("--emit", lens_args.emit, "what to print")
        ->check(CLI::IsMember({"matrix", "form", "homology"}));
    lens->add_option("--format", lens_args.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));

    LinkingArgs linking_args;
    CLI::App* linking = app.add_subcommand("linking", "linking form of a gluing matrix");
    linking->add_option("--matrix", linking_args.matrix_path, "gluing matrix JSON file, - for stdin")
        ->required();
    linking->add_option("--format", linking_args.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));

    IsometricArgs iso_args;
    CLI::App* iso = app.add_subcommand("isometric", "decide isometry of two linking forms");
    iso->add_option("form1", iso_args.form1, "first form JSON file")->required();
    iso->add_option("form2", iso_args.form2, "second form JSON file")->required();
    iso->add_option("--cap", iso_args.cap, "search cap on the group order (default 5000)");
    iso->add_option("--format", iso_args.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));

    CorpusArgs corpus_args;
    CLI::App* corpus = app.add_subcommand("corpus", "deterministic corpus of random gluings");
    corpus->add_option("--genus", corpus_args.genus, "genus of the splitting (>= 1)");
    corpus->add_option("--twists", corpus_args.twists, "transvections per instance");
    corpus->add_option("--count", corpus_args.count, "number of instances");
    corpus->add_option("--seed", corpus_args.seed, "seed of the first instance");
    corpus->add_flag("--check", corpus_args.check, "run the oracle agreement suite per instance");

    OracleArgs oracle_args;
    CLI::App* orc = app.add_subcommand("oracle", "brute-force reference computations");
    orc->add_option("mode", oracle_args.mode, "cokernel or table")->required();
    orc->add_option("--matrix", oracle_args.matrix_path, "matrix JSON file, - for stdin")
        ->required();
    orc->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (lens->parsed()) cmd_lens(lens_args);
        if (linking->parsed()) cmd_linking(linking_args);
        if (iso->parsed()) cmd_isometric(iso_args);
        if (corpus->parsed()) cmd_corpus(corpus_args);
        if (orc->parsed()) cmd_oracle(oracle_args);
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const SearchCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const NotRationalHomologySphere& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const NotAntiSymplectic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotSymplectic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const OddDimension& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
