#include "lrca/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lrca {

namespace {

constexpr const char* kMagic = "lrca-code 1";

std::string next_line(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return line;
    }
    throw std::runtime_error("unexpected end of code file");
}

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

std::string expect_key(std::istream& is, const std::string& key) {
    std::string line = next_line(is);
    if (line.rfind(key, 0) != 0)
        throw std::runtime_error("expected '" + key + "' record, got: " + line);
    std::string rest = line.substr(key.size());
    if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
    return rest;
}

void write_poly(std::ostream& os, const FiniteField& f, const Polynomial& p) {
    os << "poly";
    for (int d = 0; d <= p.degree(); ++d) os << ' ' << f.token(p.coeff((std::size_t)d));
    if (p.is_zero()) os << " " << f.token(0);
    os << '\n';
}

Polynomial read_poly(std::istream& is, const FieldPtr& f) {
    auto toks = tokens(expect_key(is, "poly"));
    std::vector<Elem> c;
    for (auto& t : toks) c.push_back(f->parse_token(t));
    return Polynomial(f, std::move(c));
}

} // namespace

void save_field_record(std::ostream& os, const FiniteField& field) {
    os << "field " << field.characteristic() << ' ' << field.degree();
    for (auto c : field.modulus()) os << ' ' << c;
    os << '\n';
}

FieldPtr parse_field_record(const std::string& rest) {
    auto toks = tokens(rest);
    if (toks.size() < 2) throw std::runtime_error("malformed field record");
    std::uint32_t p = (std::uint32_t)std::stoul(toks[0]);
    std::uint32_t m = (std::uint32_t)std::stoul(toks[1]);
    if (toks.size() != 2 + m + 1) throw std::runtime_error("malformed field modulus");
    std::vector<std::uint32_t> mod;
    for (std::size_t i = 2; i < toks.size(); ++i) mod.push_back((std::uint32_t)std::stoul(toks[i]));
    return make_field(p, m, mod);
}

void save_code(std::ostream& os, const EvaluationCode& code) {
    os << kMagic << '\n';
    os << "kind evaluation\n";
    os << "construction " << code.provenance << '\n';
    save_field_record(os, *code.field);
    os << "max-degree " << code.max_degree << '\n';
    os << "points";
    for (Elem a : code.points) os << ' ' << code.field->token(a);
    os << '\n';
    os << "basis " << code.basis.polys.size() << '\n';
    for (const auto& p : code.basis.polys) write_poly(os, *code.field, p);
    os << "partitions " << code.families.size() << '\n';
    for (const auto& fam : code.families) {
        os << "partition r " << fam.r << " blocks " << fam.partition.blocks.size();
        if (fam.partition.subgroup) {
            const auto& H = *fam.partition.subgroup;
            os << " subgroup "
               << (H.kind == Subgroup::Kind::additive ? "additive" : "multiplicative");
            for (Elem g : H.generators) os << ' ' << code.field->token(g);
        }
        os << '\n';
        for (const auto& block : fam.partition.blocks) {
            os << "block";
            for (Elem e : block) os << ' ' << code.field->token(e);
            os << '\n';
        }
    }
}

void save_code(std::ostream& os, const ParityCheckCode& code) {
    os << kMagic << '\n';
    os << "kind parity-check\n";
    os << "construction construction2 q=" << code.q << " r=" << code.r << " t=" << code.t
       << " v=" << code.v << " k=" << code.k << " m=" << code.ext_degree << '\n';
    save_field_record(os, *code.field);
    os << "params " << code.q << ' ' << code.r << ' ' << code.t << ' ' << code.v << ' '
       << code.k << ' ' << code.ext_degree << '\n';
    os << "alphas";
    for (Elem a : code.alphas) os << ' ' << code.field->token(a);
    os << '\n';
}

void save_code_file(const std::string& path, const AnyCode& code) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open file for writing: " + path);
    std::visit([&](const auto& c) { save_code(os, c); }, code);
}

namespace {

EvaluationCode load_evaluation(std::istream& is, std::string provenance) {
    FieldPtr field = parse_field_record(expect_key(is, "field"));
    int max_degree = std::stoi(expect_key(is, "max-degree"));

    std::vector<Elem> points;
    for (auto& t : tokens(expect_key(is, "points"))) points.push_back(field->parse_token(t));

    std::size_t nbasis = std::stoul(expect_key(is, "basis"));
    PolyBasis basis;
    basis.max_degree = max_degree;
    for (std::size_t i = 0; i < nbasis; ++i) basis.polys.push_back(read_poly(is, field));

    std::size_t nparts = std::stoul(expect_key(is, "partitions"));
    std::vector<FamilySpec> families;
    for (std::size_t i = 0; i < nparts; ++i) {
        auto head = tokens(expect_key(is, "partition"));
        if (head.size() < 4 || head[0] != "r" || head[2] != "blocks")
            throw std::runtime_error("malformed partition record");
        int r = std::stoi(head[1]);
        std::size_t nblocks = std::stoul(head[3]);
        std::optional<Subgroup> H;
        if (head.size() > 4) {
            if (head[4] != "subgroup" || head.size() < 7)
                throw std::runtime_error("malformed subgroup record");
            std::vector<Elem> gens;
            for (std::size_t g = 6; g < head.size(); ++g)
                gens.push_back(field->parse_token(head[g]));
            if (head[5] == "additive")
                H = additive_subgroup(field, gens);
            else if (head[5] == "multiplicative")
                H = multiplicative_subgroup(field, gens.at(0));
            else
                throw std::runtime_error("unknown subgroup kind: " + head[5]);
        }
        std::vector<std::vector<Elem>> blocks;
        for (std::size_t b = 0; b < nblocks; ++b) {
            std::vector<Elem> block;
            for (auto& t : tokens(expect_key(is, "block"))) block.push_back(field->parse_token(t));
            blocks.push_back(std::move(block));
        }
        Partition part = make_partition(field, std::move(blocks));
        part.subgroup = H;
        families.push_back({std::move(part), r});
    }

    EvaluationCode code;
    code.field = field;
    code.points = std::move(points);
    code.basis = std::move(basis);
    code.families = std::move(families);
    code.max_degree = max_degree;
    code.provenance = std::move(provenance);
    for (const auto& fam : code.families) {
        bool good = true;
        for (const auto& p : code.basis.polys)
            for (const auto& block : fam.partition.blocks)
                if (restricted_degree(p, block) > fam.r - 1) good = false;
        code.local_recovery_ok.push_back(good);
    }
    return code;
}

ParityCheckCode load_parity(std::istream& is) {
    FieldPtr field = parse_field_record(expect_key(is, "field"));
    auto ps = tokens(expect_key(is, "params"));
    if (ps.size() != 6) throw std::runtime_error("malformed params record");
    std::uint32_t q = (std::uint32_t)std::stoul(ps[0]);
    int r = std::stoi(ps[1]), t = std::stoi(ps[2]), v = std::stoi(ps[3]), k = std::stoi(ps[4]);
    int m = std::stoi(ps[5]);
    std::vector<Elem> alphas;
    for (auto& tok : tokens(expect_key(is, "alphas"))) alphas.push_back(field->parse_token(tok));
    return construction2(q, r, t, v, k, alphas, m);
}

} // namespace

AnyCode load_code(std::istream& is) {
    if (next_line(is) != kMagic) throw std::runtime_error("not a code file");
    std::string kind = expect_key(is, "kind");
    std::string provenance = expect_key(is, "construction");
    if (kind == "evaluation") return load_evaluation(is, std::move(provenance));
    if (kind == "parity-check") return load_parity(is);
    throw std::runtime_error("unknown code kind: " + kind);
}

AnyCode load_code_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open file: " + path);
    return load_code(is);
}

} // namespace lrca
