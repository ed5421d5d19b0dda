#include "designiso/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace designiso {

namespace {

// Lines stripped of comments, paired with their 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.emplace_back(number, line);
    }
    return out;
}

}  // namespace

Design parse_design(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty design file", 1);

    std::size_t cursor = 0;
    Design d;
    {
        auto [number, line] = lines[cursor++];
        std::istringstream is(line);
        std::string keyword;
        if (!(is >> keyword) || keyword != "design")
            throw ParseError("expected header 'design <t> <v> <k> <lambda>'", number);
        std::string extra;
        if (!(is >> d.params.t >> d.params.v >> d.params.k >> d.params.lambda) || (is >> extra))
            throw ParseError("malformed header 'design <t> <v> <k> <lambda>'", number);
        try {
            check_params(d.params);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), number);
        }
    }
    long long b;
    {
        if (cursor >= lines.size()) throw ParseError("missing block count line", lines.back().first);
        auto [number, line] = lines[cursor++];
        std::istringstream is(line);
        std::string extra;
        if (!(is >> b) || b < 0 || (is >> extra))
            throw ParseError("malformed block count line", number);
    }

    std::set<Block> seen;
    while (cursor < lines.size()) {
        auto [number, line] = lines[cursor++];
        std::istringstream is(line);
        Block block;
        int p;
        while (is >> p) block.push_back(p);
        if (!is.eof()) throw ParseError("malformed block line", number);
        if (static_cast<int>(block.size()) != d.params.k)
            throw ParseError("block has " + std::to_string(block.size()) +
                                 " points, expected k = " + std::to_string(d.params.k),
                             number);
        std::sort(block.begin(), block.end());
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (block[i] < 0 || block[i] >= d.params.v)
                throw ParseError("point index " + std::to_string(block[i]) + " out of range [0," +
                                     std::to_string(d.params.v) + ")",
                                 number);
            if (i > 0 && block[i] == block[i - 1])
                throw ParseError("repeated point " + std::to_string(block[i]) + " in block",
                                 number);
        }
        if (!seen.insert(block).second) throw ParseError("duplicate block", number);
        d.blocks.push_back(std::move(block));
    }
    if (static_cast<long long>(d.blocks.size()) != b)
        throw ParseError("header announces " + std::to_string(b) + " blocks but " +
                             std::to_string(d.blocks.size()) + " were given",
                         lines.back().first);
    return normalized(std::move(d));
}

std::string emit_design(const Design& d) {
    Design norm = normalized(d);
    std::ostringstream os;
    os << "design " << norm.params.t << " " << norm.params.v << " " << norm.params.k << " "
       << norm.params.lambda << "\n";
    os << norm.blocks.size() << "\n";
    for (const Block& b : norm.blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
        os << "\n";
    }
    return os.str();
}

Graph parse_graph(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    int n = -1;
    long long m = -1, edges_seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line[0] == 'c' || line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream is(line);
        std::string tag;
        is >> tag;
        if (tag == "p") {
            if (n >= 0) throw ParseError("duplicate p-line", number);
            std::string format;
            if (!(is >> format >> n >> m) || format != "edge" || n < 0 || m < 0)
                throw ParseError("malformed p-line, expected 'p edge <n> <m>'", number);
            g = Graph(n);
        } else if (tag == "e") {
            if (n < 0) throw ParseError("e-line before p-line", number);
            int u, v;
            if (!(is >> u >> v)) throw ParseError("malformed e-line, expected 'e <u> <v>'", number);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("edge endpoint out of range [1," + std::to_string(n) + "]",
                                 number);
            if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), number);
            ++edges_seen;
            if (g.adjacent(u - 1, v - 1)) {
                if (warnings)
                    warnings->push_back("line " + std::to_string(number) + ": duplicate edge " +
                                        std::to_string(u) + " " + std::to_string(v) +
                                        " collapsed");
                continue;
            }
            g.add_edge(u - 1, v - 1);
        } else {
            throw ParseError("unknown line type '" + tag + "'", number);
        }
    }
    if (n < 0) throw ParseError("missing p-line", number == 0 ? 1 : number);
    if (edges_seen != m)
        throw ParseError("p-line announces " + std::to_string(m) + " edges but " +
                             std::to_string(edges_seen) + " were given",
                         number);
    return g;
}

std::string emit_graph(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.n << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.n; ++u)
        for (auto v = g.adj[u].find_next(u); v != boost::dynamic_bitset<>::npos;
             v = g.adj[u].find_next(v))
            os << "e " << u + 1 << " " << v + 1 << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << contents;
}

}  // namespace designiso
