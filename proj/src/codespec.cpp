#include "qpolymat/codespec.hpp"

#include <fstream>
#include <sstream>

namespace qpolymat {

namespace {

struct Line {
    int number;
    std::vector<long long> values;
};

// Strips comments, keeps blank lines (they separate matrices).
std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream is(text);
    std::string raw;
    int number = 0;
    while (std::getline(is, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        long long v;
        while (ls >> v) line.values.push_back(v);
        if (!ls.eof()) {
            ls.clear();
            std::string trailing;
            ls >> trailing;
            if (!trailing.empty()) throw ParseError("unexpected token '" + trailing + "'", number);
        }
        out.push_back(std::move(line));
    }
    return out;
}

}  // namespace

CodeSpecFile parse_code_spec(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    size_t pos = 0;
    while (pos < lines.size() && lines[pos].values.empty()) ++pos;
    if (pos == lines.size()) throw ParseError("missing header line 'q n m [k]'", 1);

    const Line& header = lines[pos];
    if (header.values.size() < 3 || header.values.size() > 4)
        throw ParseError("header must be 'q n m' or 'q n m k'", header.number);

    CodeSpecFile spec;
    long long q = header.values[0], n = header.values[1], m = header.values[2];
    if (q < 2) throw ParseError("q must be a prime >= 2", header.number);
    if (n < 1 || m < 1) throw ParseError("n and m must be positive", header.number);
    spec.q = static_cast<unsigned>(q);
    spec.n = static_cast<int>(n);
    spec.m = static_cast<int>(m);
    if (header.values.size() == 4) {
        if (header.values[3] < 0) throw ParseError("generator count must be nonnegative", header.number);
        spec.declared_generators = static_cast<int>(header.values[3]);
    }
    ++pos;

    while (pos < lines.size()) {
        while (pos < lines.size() && lines[pos].values.empty()) ++pos;
        if (pos == lines.size()) break;
        std::vector<long long> flat;
        for (int row = 0; row < spec.n; ++row) {
            if (pos == lines.size() || lines[pos].values.empty())
                throw ParseError("matrix block ended after " + std::to_string(row) + " of " +
                                     std::to_string(spec.n) + " rows",
                                 pos < lines.size() ? lines[pos].number : lines.back().number);
            if (static_cast<int>(lines[pos].values.size()) != spec.m)
                throw ParseError("expected " + std::to_string(spec.m) + " entries, found " +
                                     std::to_string(lines[pos].values.size()),
                                 lines[pos].number);
            flat.insert(flat.end(), lines[pos].values.begin(), lines[pos].values.end());
            ++pos;
        }
        if (pos < lines.size() && !lines[pos].values.empty())
            throw ParseError("expected a blank line between matrices", lines[pos].number);
        spec.generators.push_back(std::move(flat));
    }

    if (spec.declared_generators && *spec.declared_generators != static_cast<int>(spec.generators.size()))
        throw ParseError("header declares " + std::to_string(*spec.declared_generators) +
                             " generators but " + std::to_string(spec.generators.size()) + " found",
                         header.number);

    // semantic checks that need no lattice
    Field field(spec.q);  // throws for composite q
    (void)field;
    return spec;
}

CodeSpecFile load_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    CodeSpecFile spec = parse_code_spec(buf.str());
    spec.label = path;
    return spec;
}

RankMetricCode build_code(const CodeSpecFile& spec, long long cap) {
    Field field(spec.q);
    std::vector<MatrixGF> gens;
    gens.reserve(spec.generators.size());
    for (const auto& flat : spec.generators)
        gens.push_back(MatrixGF::from_integers(field, spec.n, spec.m, flat));
    return RankMetricCode(field, spec.n, spec.m, gens, cap);
}

std::string format_code_spec(const RankMetricCode& C, const std::string& label) {
    std::ostringstream os;
    if (!label.empty()) os << "# " << label << "\n";
    os << C.field().q() << " " << C.n() << " " << C.m() << " " << C.dim() << "\n";
    for (const auto& M : C.basis()) {
        os << "\n";
        for (int i = 0; i < M.rows(); ++i) {
            for (int j = 0; j < M.cols(); ++j) {
                if (j) os << " ";
                os << M.at(i, j);
            }
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace qpolymat
