#include "designiso/canonical.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace designiso {

bool Coloring::discrete() const {
    return std::all_of(cells.begin(), cells.end(),
                       [](const std::vector<Point>& c) { return c.size() == 1; });
}

std::vector<int> Coloring::cell_of(int v) const {
    std::vector<int> out(v, -1);
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
        for (Point p : cells[ci]) out[p] = static_cast<int>(ci);
    return out;
}

Coloring unit_coloring(int v) {
    Coloring c;
    c.cells.emplace_back();
    for (int p = 0; p < v; ++p) c.cells[0].push_back(p);
    return c;
}

namespace {

// Signature of a point: the multiset, over its incident blocks, of the sorted
// cell indices of the block's other points. Stored flat; chunks have fixed
// width k-1 and are themselves sorted, so flat comparison equals multiset
// comparison.
void point_signature(const Design& d, const std::vector<std::vector<int>>& point_blocks,
                     const std::vector<int>& cell_of, Point p, int stride,
                     std::vector<int>& flat, std::vector<int>& order, std::vector<int>& tmp) {
    flat.clear();
    for (int bi : point_blocks[p]) {
        std::size_t start = flat.size();
        for (Point q : d.blocks[bi])
            if (q != p) flat.push_back(cell_of[q]);
        std::sort(flat.begin() + start, flat.end());
    }
    const int chunks = stride == 0 ? 0 : static_cast<int>(flat.size()) / stride;
    if (chunks > 1) {
        order.resize(chunks);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int c) {
            return std::lexicographical_compare(flat.begin() + a * stride,
                                                flat.begin() + (a + 1) * stride,
                                                flat.begin() + c * stride,
                                                flat.begin() + (c + 1) * stride);
        });
        tmp.resize(flat.size());
        for (int i = 0; i < chunks; ++i)
            std::copy(flat.begin() + order[i] * stride, flat.begin() + (order[i] + 1) * stride,
                      tmp.begin() + i * stride);
        flat.swap(tmp);
    }
}

// Fast path for k <= 5: one block's worth of cell indices (16 bits each,
// sorted) packs into a single 64-bit word, so a signature is a short sorted
// vector of words and all comparisons are word compares.
void point_signature_packed(const Design& d, const std::vector<std::vector<int>>& point_blocks,
                            const std::vector<int>& cell_of, Point p,
                            std::vector<std::uint64_t>& sig) {
    sig.clear();
    for (int bi : point_blocks[p]) {
        int vals[5];
        int n = 0;
        for (Point q : d.blocks[bi])
            if (q != p) vals[n++] = cell_of[q];
        std::sort(vals, vals + n);
        std::uint64_t word = 0;
        for (int i = 0; i < n; ++i) word = (word << 16) | static_cast<std::uint64_t>(vals[i]);
        sig.push_back(word);
    }
    std::sort(sig.begin(), sig.end());
}

std::vector<std::vector<int>> incidence_lists(const Design& d) {
    std::vector<std::vector<int>> point_blocks(d.params.v);
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi)
        for (Point p : d.blocks[bi]) point_blocks[p].push_back(static_cast<int>(bi));
    return point_blocks;
}

}  // namespace

Coloring refine(const Design& d, Coloring coloring) {
    const int v = d.params.v;
    const int stride = d.params.k - 1;
    const auto point_blocks = incidence_lists(d);

    const bool packed = stride <= 4 && v <= 65535;

    std::vector<int> sig_buf, order_buf, tmp_buf;
    std::vector<std::uint64_t> packed_buf;
    while (true) {
        std::vector<int> cell_of = coloring.cell_of(v);
        Coloring next;
        bool split = false;
        if (packed) {
            std::vector<std::vector<std::uint64_t>> sigs(v);
            for (const auto& cell : coloring.cells)
                if (cell.size() > 1)
                    for (Point p : cell) {
                        point_signature_packed(d, point_blocks, cell_of, p, packed_buf);
                        sigs[p] = packed_buf;
                    }
            for (const auto& cell : coloring.cells) {
                if (cell.size() == 1) {
                    next.cells.push_back(cell);
                    continue;
                }
                std::map<std::vector<std::uint64_t>, std::vector<Point>> groups;
                for (Point p : cell) groups[sigs[p]].push_back(p);
                if (groups.size() > 1) split = true;
                for (auto& [sig, members] : groups) next.cells.push_back(std::move(members));
            }
        } else {
            std::vector<std::vector<int>> sigs(v);
            for (int p = 0; p < v; ++p) {
                point_signature(d, point_blocks, cell_of, p, stride, sig_buf, order_buf, tmp_buf);
                sigs[p] = sig_buf;
            }
            for (const auto& cell : coloring.cells) {
                if (cell.size() == 1) {
                    next.cells.push_back(cell);
                    continue;
                }
                std::map<std::vector<int>, std::vector<Point>> groups;
                for (Point p : cell) groups[sigs[p]].push_back(p);
                if (groups.size() > 1) split = true;
                for (auto& [sig, members] : groups) next.cells.push_back(std::move(members));
            }
        }
        coloring = std::move(next);
        if (!split) break;
    }
    return coloring;
}

std::vector<unsigned char> canonical_encoding_bytes(const Params& p,
                                                    const std::vector<Block>& blocks) {
    if (p.v > 65535) throw std::invalid_argument("encoding supports v <= 65535");
    std::vector<unsigned char> bytes;
    bytes.reserve(20 + blocks.size() * p.k * 2);
    auto be32 = [&](long long x) {
        for (int shift = 24; shift >= 0; shift -= 8)
            bytes.push_back(static_cast<unsigned char>((x >> shift) & 0xff));
    };
    be32(p.t);
    be32(p.v);
    be32(p.k);
    be32(p.lambda);
    be32(static_cast<long long>(blocks.size()));
    for (const Block& b : blocks)
        for (Point pt : b) {
            bytes.push_back(static_cast<unsigned char>((pt >> 8) & 0xff));
            bytes.push_back(static_cast<unsigned char>(pt & 0xff));
        }
    return bytes;
}

std::string sha256_hex(const std::vector<unsigned char>& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 computation failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

namespace {

// Flat encoding of a relabeled block list: blocks of width k, each sorted,
// the list sorted lexicographically. Plain vector comparison is the total
// order minimized by the search.
using FlatEncoding = std::vector<int>;

void flat_encoding(const Design& d, const std::vector<int>& label_of, FlatEncoding& out,
                   std::vector<int>& order_buf) {
    const int k = d.params.k;
    const int b = static_cast<int>(d.blocks.size());
    out.resize(static_cast<std::size_t>(b) * k);
    for (int i = 0; i < b; ++i) {
        for (int j = 0; j < k; ++j) out[i * k + j] = label_of[d.blocks[i][j]];
        std::sort(out.begin() + i * k, out.begin() + (i + 1) * k);
    }
    order_buf.resize(b);
    std::iota(order_buf.begin(), order_buf.end(), 0);
    std::sort(order_buf.begin(), order_buf.end(), [&](int a, int c) {
        return std::lexicographical_compare(out.begin() + a * k, out.begin() + (a + 1) * k,
                                            out.begin() + c * k, out.begin() + (c + 1) * k);
    });
    FlatEncoding sorted(out.size());
    for (int i = 0; i < b; ++i)
        std::copy(out.begin() + order_buf[i] * k, out.begin() + (order_buf[i] + 1) * k,
                  sorted.begin() + i * k);
    out.swap(sorted);
}

class Canonizer {
  public:
    Canonizer(const Design& d, int threads) : d_(d), threads_(std::max(1, threads)) {}

    CanonicalForm run(CanonicalStats* stats_out) {
        const int v = d_.params.v;
        std::vector<Local> locals(threads_);
        if (threads_ == 1) {
            worker(0, locals[0]);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < threads_; ++w)
                pool.emplace_back([this, w, &locals] { worker(w, locals[w]); });
            for (auto& th : pool) th.join();
        }

        // Deterministic reduction: smallest encoding, ties broken by the
        // first generator's index. Independent of thread scheduling.
        const Local* winner = nullptr;
        for (const Local& loc : locals) {
            if (!loc.has) continue;
            if (!winner || loc.enc < winner->enc ||
                (loc.enc == winner->enc && loc.u1 < winner->u1))
                winner = &loc;
        }
        if (!winner) throw std::logic_error("canonical search produced no labeling");

        CanonicalForm form;
        form.params = d_.params;
        form.relabeling = winner->relabeling;
        const int k = d_.params.k;
        form.canonical_blocks.reserve(winner->enc.size() / k);
        for (std::size_t i = 0; i + k <= winner->enc.size(); i += k)
            form.canonical_blocks.emplace_back(winner->enc.begin() + i,
                                               winner->enc.begin() + i + k);
        form.digest = sha256_hex(canonical_encoding_bytes(form.params, form.canonical_blocks));
        if (stats_out) {
            stats_out->sequences_explored = sequences_.load();
            stats_out->refine_calls = refines_.load();
            stats_out->branch_nodes = nodes_.load();
            stats_out->leaves = leaves_.load();
        }
        (void)v;
        return form;
    }

  private:
    struct Local {
        bool has = false;
        FlatEncoding enc;
        std::vector<Point> relabeling;
        int u1 = -1;
    };

    struct WorkerState {
        Local* local;
        int current_u1 = -1;
        std::map<std::vector<Point>, std::vector<Point>> closure_cache;
        FlatEncoding enc_buf;
        std::vector<int> order_buf;
        std::vector<int> label_lb;
    };

    void worker(int wid, Local& local) {
        WorkerState ws;
        ws.local = &local;
        std::vector<Point> seq;
        for (int u1 = wid; u1 < d_.params.v; u1 += threads_) {
            ws.current_u1 = u1;
            seq.assign(1, u1);
            enumerate(seq, closure(d_, {u1}), ws);
        }
    }

    void enumerate(std::vector<Point>& seq, const std::vector<Point>& closed, WorkerState& ws) {
        const int v = d_.params.v;
        if (static_cast<int>(closed.size()) == v) {
            sequences_.fetch_add(1, std::memory_order_relaxed);
            process_sequence(seq, ws);
            return;
        }
        for (int p = 0; p < v; ++p) {
            if (std::binary_search(closed.begin(), closed.end(), p)) continue;
            seq.push_back(p);
            std::vector<Point> key = closed;
            key.insert(std::lower_bound(key.begin(), key.end(), p), p);
            auto it = ws.closure_cache.find(key);
            if (it == ws.closure_cache.end())
                it = ws.closure_cache.emplace(key, closure(d_, key)).first;
            enumerate(seq, it->second, ws);
            seq.pop_back();
        }
    }

    void process_sequence(const std::vector<Point>& seq, WorkerState& ws) {
        const int v = d_.params.v;
        Coloring c;
        std::vector<char> used(v, 0);
        for (Point p : seq) {
            c.cells.push_back({p});
            used[p] = 1;
        }
        std::vector<Point> rest;
        for (int p = 0; p < v; ++p)
            if (!used[p]) rest.push_back(p);
        if (!rest.empty()) c.cells.push_back(std::move(rest));
        refines_.fetch_add(1, std::memory_order_relaxed);
        extend(refine(d_, c), ws);
    }

    void extend(const Coloring& c, WorkerState& ws) {
        nodes_.fetch_add(1, std::memory_order_relaxed);
        const int v = d_.params.v;

        // Every point's final label is at least the first position of its
        // cell, so the sorted list of per-block lower-bound keys is a lex
        // lower bound for every complete encoding below this node.
        ws.label_lb.assign(v, 0);
        int pos = 0;
        int branch_cell = -1;
        for (std::size_t ci = 0; ci < c.cells.size(); ++ci) {
            if (c.cells[ci].size() > 1 && branch_cell < 0) branch_cell = static_cast<int>(ci);
            for (Point p : c.cells[ci]) ws.label_lb[p] = pos;
            pos += static_cast<int>(c.cells[ci].size());
        }
        flat_encoding(d_, ws.label_lb, ws.enc_buf, ws.order_buf);
        {
            std::lock_guard<std::mutex> lock(best_mtx_);
            if (has_best_ && best_enc_ < ws.enc_buf) return;  // strict prune
        }

        if (branch_cell < 0) {
            // Discrete coloring: the lower bound is the exact encoding.
            leaves_.fetch_add(1, std::memory_order_relaxed);
            Local& local = *ws.local;
            if (!local.has || ws.enc_buf < local.enc) {
                local.has = true;
                local.enc = ws.enc_buf;
                local.relabeling = ws.label_lb;
                local.u1 = ws.current_u1;
            }
            std::lock_guard<std::mutex> lock(best_mtx_);
            if (!has_best_ || ws.enc_buf < best_enc_) {
                has_best_ = true;
                best_enc_ = ws.enc_buf;
            }
            return;
        }

        const std::vector<Point> candidates = c.cells[branch_cell];
        for (Point p : candidates) {
            Coloring split;
            split.cells.reserve(c.cells.size() + 1);
            for (std::size_t ci = 0; ci < c.cells.size(); ++ci) {
                if (static_cast<int>(ci) != branch_cell) {
                    split.cells.push_back(c.cells[ci]);
                    continue;
                }
                split.cells.push_back({p});
                std::vector<Point> remainder;
                for (Point q : c.cells[ci])
                    if (q != p) remainder.push_back(q);
                split.cells.push_back(std::move(remainder));
            }
            refines_.fetch_add(1, std::memory_order_relaxed);
            extend(refine(d_, split), ws);
        }
    }

    const Design& d_;
    const int threads_;
    std::mutex best_mtx_;
    bool has_best_ = false;
    FlatEncoding best_enc_;
    std::atomic<unsigned long long> sequences_{0}, refines_{0}, nodes_{0}, leaves_{0};
};

}  // namespace

CanonicalForm canonical_form(const Design& d, int threads, CanonicalStats* stats) {
    ValidationReport report = validate(d);
    if (!report.ok()) {
        std::ostringstream os;
        os << "canonical_form requires a valid design; first violation: "
           << report.violations.front().rule << ": " << report.violations.front().detail;
        throw std::invalid_argument(os.str());
    }
    Canonizer canonizer(d, threads);
    return canonizer.run(stats);
}

std::optional<std::vector<Point>> are_isomorphic(const Design& d1, const Design& d2,
                                                 int threads) {
    if (d1.params != d2.params || d1.blocks.size() != d2.blocks.size()) return std::nullopt;
    CanonicalForm f1 = canonical_form(d1, threads);
    CanonicalForm f2 = canonical_form(d2, threads);
    if (f1.digest != f2.digest) return std::nullopt;

    std::vector<Point> inverse2(d2.params.v);
    for (int p = 0; p < d2.params.v; ++p) inverse2[f2.relabeling[p]] = p;
    std::vector<Point> witness(d1.params.v);
    for (int p = 0; p < d1.params.v; ++p) witness[p] = inverse2[f1.relabeling[p]];

    // Never emit an unchecked witness.
    std::set<Block> blocks2(d2.blocks.begin(), d2.blocks.end());
    for (const Block& b : d1.blocks) {
        Block mapped(b.size());
        std::transform(b.begin(), b.end(), mapped.begin(), [&](Point p) { return witness[p]; });
        std::sort(mapped.begin(), mapped.end());
        if (!blocks2.count(mapped))
            throw std::logic_error("canonical witness failed block verification");
    }
    return witness;
}

namespace {

struct BruteForceSearcher {
    const Design& d1;
    const Design& d2;
    std::vector<std::vector<int>> point_blocks1;
    std::vector<int> map;        // d1 point -> d2 point, -1 unmapped
    std::vector<char> used;

    long long count_superblocks(const Design& d, const std::vector<int>& pts) const {
        long long count = 0;
        for (const Block& b : d.blocks)
            if (std::includes(b.begin(), b.end(), pts.begin(), pts.end())) ++count;
        return count;
    }

    bool compatible(int p) const {
        for (int bi : point_blocks1[p]) {
            std::vector<int> mapped_part, image;
            for (Point q : d1.blocks[bi])
                if (map[q] >= 0) {
                    mapped_part.push_back(q);
                    image.push_back(map[q]);
                }
            if (static_cast<int>(mapped_part.size()) < d1.params.t) continue;
            std::sort(image.begin(), image.end());
            if (count_superblocks(d1, mapped_part) != count_superblocks(d2, image)) return false;
        }
        return true;
    }

    bool search(int depth) {
        const int v = d1.params.v;
        if (depth == v) return true;  // compatibility held at every extension
        for (int q = 0; q < v; ++q) {
            if (used[q]) continue;
            map[depth] = q;
            used[q] = 1;
            if (compatible(depth) && search(depth + 1)) return true;
            map[depth] = -1;
            used[q] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Point>> brute_force_iso(const Design& d1, const Design& d2) {
    if (d1.params != d2.params || d1.blocks.size() != d2.blocks.size()) return std::nullopt;
    BruteForceSearcher searcher{d1, d2, incidence_lists(d1),
                                std::vector<int>(d1.params.v, -1),
                                std::vector<char>(d2.params.v, 0)};
    if (!searcher.search(0)) return std::nullopt;

    // Full verification of the found map.
    std::set<Block> blocks2(d2.blocks.begin(), d2.blocks.end());
    for (const Block& b : d1.blocks) {
        Block mapped(b.size());
        std::transform(b.begin(), b.end(), mapped.begin(),
                       [&](Point p) { return searcher.map[p]; });
        std::sort(mapped.begin(), mapped.end());
        if (!blocks2.count(mapped)) return std::nullopt;
    }
    return std::vector<Point>(searcher.map.begin(), searcher.map.end());
}

LineGraphIsoCertificate line_graph_isomorphic(const Graph& g1, const Graph& g2, int t, int k,
                                              int lambda, int threads) {
    LineGraphIsoCertificate cert;
    cert.reconstruction1 = reconstruct(g1, t, k, lambda);
    cert.reconstruction2 = reconstruct(g2, t, k, lambda);
    if (!cert.reconstruction1.certified() || !cert.reconstruction2.certified())
        throw ReconstructionError("reconstruction certificate failed; cannot decide isomorphism");

    cert.point_map = are_isomorphic(cert.reconstruction1.design, cert.reconstruction2.design,
                                    threads);
    cert.isomorphic = cert.point_map.has_value();
    if (!cert.isomorphic) return cert;

    // Design isomorphism -> block bijection -> vertex bijection.
    std::map<Block, int> vertex_of_block2;
    for (std::size_t i = 0; i < cert.reconstruction2.design.blocks.size(); ++i)
        vertex_of_block2[cert.reconstruction2.design.blocks[i]] = static_cast<int>(i);
    std::vector<int> vmap(g1.n, -1);
    for (int i = 0; i < g1.n; ++i) {
        Block mapped = cert.reconstruction1.design.blocks[i];
        for (Point& p : mapped) p = (*cert.point_map)[p];
        std::sort(mapped.begin(), mapped.end());
        auto it = vertex_of_block2.find(mapped);
        if (it == vertex_of_block2.end())
            throw std::logic_error("induced block map is not onto the second design");
        vmap[i] = it->second;
    }
    for (int i = 0; i < g1.n; ++i)
        for (int j = i + 1; j < g1.n; ++j)
            if (g1.adjacent(i, j) != g2.adjacent(vmap[i], vmap[j]))
                throw std::logic_error("induced vertex map failed edge verification");
    cert.vertex_map = std::move(vmap);
    return cert;
}

}  // namespace designiso
