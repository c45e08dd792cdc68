#ifndef TRIEVEN_PIPELINE_HPP
#define TRIEVEN_PIPELINE_HPP

#include <map>
#include <string>

#include "trieven/canonical.hpp"
#include "trieven/constructions.hpp"

namespace trieven {

/// The nine doubly even self-dual [24,12] codes, in the fixed order
/// g24, d24+, d12^2+, (d10 e7^2)+, d8^3+, d6^4+, d4^6+, d16+ + e8, e8^3.
/// Verified self-dual and doubly even on load.
std::vector<LinearCode> load_desd24();

/// A doubly even code of length 24 containing its triply even radical,
/// with the machinery needed by the pair constructions.
struct PartsEntry {
    QuotientContext ctx;        // C together with R = C meet Rad C
    int prd = 0;                // largest dim R among enumerated supercodes
    CanonicalForm canon;        // of C; supplies Aut(C) generators
    WeightEnumerator we;
    LinearCode check_dual;      // dual of the check code: rows of X over F_2^X
    CanonicalForm check_canon;  // of check_dual; its coordinate automorphisms
                                // are exactly the linear stabilizer of X on
                                // the span of X
    std::vector<GlMat> g0;      // Aut(C) action on C/R, one per generator
};

PartsEntry make_parts_entry(const LinearCode& c, int prd);

/// Codimension-1 subcodes of C containing R, one per Aut(C)-orbit
/// (orbits on the nonzero cosets of dual(C) inside dual(R)).
std::vector<LinearCode> subcode_step(const LinearCode& c, const LinearCode& r,
                                     const std::vector<Perm>& aut_gens);

/// Iterative descent from the nine self-dual codes down to dimension 4:
/// orbit-representative subcodes, dedup up to equivalence keeping the largest
/// prd, drop codes whose triply even radical leaves the code. level_counts
/// (when given) receives the per-dimension sizes for dims 12, 11, ..., 4.
std::vector<PartsEntry> build_parts_db(
    std::vector<std::size_t>* level_counts = nullptr, int jobs = 1);

/// Counts by (13 - dim C, dim R) in a ragged layout: row i (i = 1..9) has
/// 13 - i entries indexed by dim R = 1..13-i.
std::vector<std::vector<std::size_t>> parts_table(
    const std::vector<PartsEntry>& db);

struct DuplexResult {
    std::vector<LinearCode> maximal;
    std::size_t constructed = 0;
    std::size_t excluded = 0;
};
/// Pair construction with C1 = C2 over every database entry: double cosets
/// G0\G1/G0, skipping the identity coset when dim R = prd (a strictly larger
/// code with the same radical exists, so the doubling is not maximal).
/// budget_seconds > 0 bounds the symmetry work per entry; exceeding it is a
/// hard error naming the entry.
DuplexResult duplex_classify(const std::vector<PartsEntry>& db, int jobs = 1,
                             double budget_seconds = 0);

struct HybridResult {
    std::vector<LinearCode> maximal;
    std::size_t pairs = 0;
    std::size_t constructed = 0;
};
/// Pair construction over pairs of inequivalent entries with isometric
/// quotients (equal quotient dim, equal |X|, equivalent check codes):
/// double cosets (h^-1 G0(C2,R2) h)\G1(C1,R1)/G0(C1,R1).
HybridResult hybrid_classify(const std::vector<PartsEntry>& db, int jobs = 1,
                             double budget_seconds = 0);

/// The 10 representatives: generalized doublings of the nine self-dual codes
/// followed by the padded triangular graph code on 10 points, with labels.
std::vector<LinearCode> representatives48();
std::vector<std::string> representative_labels48();

/// Index of the representative equivalent to c (matched by (dim, number of
/// weight-8 words), then confirmed by equivalence), or -1.
int identify48(const LinearCode& c, const std::vector<LinearCode>& reps);

struct ClassificationReport {
    std::vector<std::size_t> level_counts;              // dims 12..4
    std::vector<std::vector<std::size_t>> parts_table;  // ragged, by (13-dim, dim R)
    std::size_t duplex_maximal = 0, duplex_constructed = 0, duplex_excluded = 0;
    std::size_t hybrid_pairs = 0, hybrid_constructed = 0, hybrid_maximal = 0;
    std::vector<LinearCode> classes;       // the 10 representatives
    std::vector<std::string> class_labels;
    std::vector<int> duplex_ids;           // representative index per maximal output
    std::vector<int> hybrid_ids;
    std::string note;

    std::string to_json() const;
    static ClassificationReport from_json(const std::string& text);
    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

struct ClassifyOptions {
    int jobs = 1;
    double budget_seconds = 0;      // per symmetry computation; 0 = unlimited
    std::string checkpoint_dir;     // empty = no checkpointing
};

/// Full length-48 classification. Throws if any maximal output fails to
/// identify against the 10 representatives or a budget is exceeded.
ClassificationReport classify48(const ClassifyOptions& opts = {});

/// Shorten each code on one coordinate per Aut-orbit, re-maximalize, dedup
/// up to equivalence; repeated down to length `min_length`. Returns the
/// classes per length (48 included as the starting point).
std::map<std::size_t, std::vector<LinearCode>> shorten_chain(
    const std::vector<LinearCode>& maximal48, std::size_t min_length = 8,
    int jobs = 1);

/// Newline-delimited JSON: a meta line, one line per code (with an integer
/// tag), and a trailing checksum line.
void checkpoint_store(const std::string& path,
                      const std::vector<LinearCode>& codes,
                      const std::vector<int>& tags,
                      const std::vector<std::size_t>& meta = {});
/// Returns false if the file does not exist; throws on checksum mismatch.
bool checkpoint_load(const std::string& path, std::vector<LinearCode>* codes,
                     std::vector<int>* tags,
                     std::vector<std::size_t>* meta = nullptr);

/// Run fn(i) for i in [0, n) on up to `jobs` threads; exceptions are
/// rethrown on the calling thread.
void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& fn);

} // namespace trieven

#endif
