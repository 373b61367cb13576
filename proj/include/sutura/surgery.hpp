#pragma once

#include "sutura/diagram.hpp"
#include "sutura/element.hpp"
#include "sutura/word.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace sutura {

enum class Dir { Up, Down };
inline Dir opposite(Dir d) { return d == Dir::Up ? Dir::Down : Dir::Up; }

// a point on a chord; t runs from the smaller endpoint (0) to the larger (1)
struct Touch {
    int chord = -1;
    double t = 0.5;
};

// e1 sits on a chord bounding r1, x crosses into the region across x.chord,
// e3 sits on a chord bounding that far region
struct AttachingArc {
    Touch e1, x, e3;
    int r1 = -1;
};

enum class ArcClass { Nontrivial, SlightlyTrivial, Supertrivial };

struct BypassSystem {
    Diagram base;
    std::vector<AttachingArc> arcs;
};

// chord sides: inner is the region holding boundary arc a for chord (a < b)
struct ChordSides {
    int inner = -1;
    int outer = -1;
};
std::vector<ChordSides> chord_sides(const Diagram& g);
int far_region(const Diagram& g, const AttachingArc& c);
ArcClass classify(const AttachingArc& c);

// touches lie on the right regions and no two arc halves cross
bool realizable(const BypassSystem& sys);

// ArcNotOnDiagram if the system cannot be drawn
DiagramOrZero surgery(const BypassSystem& sys, Dir dir);
DiagramOrZero surgery(const Diagram& g, const AttachingArc& c, Dir dir);
DiagramOrZero surgery(const DiagramOrZero& g, const AttachingArc& c, Dir dir);

// TrivialArc unless c meets three distinct chords
std::array<Diagram, 3> bypass_triple(const Diagram& g, const AttachingArc& c);

// the arc hugging the boundary around point y, as used by the decomposition step
AttachingArc boundary_arc(const Diagram& g, int y);

struct ArcInfo {
    AttachingArc arc;
    ArcClass cls = ArcClass::Nontrivial;
    std::optional<bool> forwards;  // only for nontrivial arcs on basis diagrams
    std::optional<Dir> vanishes;   // trivial arcs: the direction giving Zero
    bool direct = false;           // supertrivial: crossing sits between the ends
};
// one representative per class
std::vector<ArcInfo> find_attaching_arcs(const Diagram& g);
std::vector<ArcInfo> find_attaching_arcs(const Diagram& g, const Word& w);

enum class MoveKind { FE, BE };
Word elementary_move(const Word& w, MoveKind kind, int i, int j);

struct GeneralisedArc {
    MoveKind kind = MoveKind::FE;
    int i = 0, j = 0;
    Word word;
    std::vector<int> regions;  // dual path from prior outer to latter outer region
    std::vector<int> chords;   // chords crossed, prior first
    int prior_chord() const { return chords.front(); }
    int latter_chord() const { return chords.back(); }
};

GeneralisedArc generalised_arc(const Word& w, MoveKind kind, int i, int j);
BypassSystem arc_to_system(const GeneralisedArc& g);
// forwards lists need i ascending and j non-decreasing; backwards j descending and i non-increasing
BypassSystem nicely_ordered_system(const Word& w, const std::vector<GeneralisedArc>& arcs);

BypassSystem cfbs(const Word& lo, const Word& hi);
BypassSystem fbs(const Word& lo, const Word& hi);
BypassSystem cbbs(const Word& lo, const Word& hi);
BypassSystem bbs(const Word& lo, const Word& hi);

BypassSystem subsystem(const BypassSystem& sys, std::uint64_t mask);

// surgeries in the opposite direction over every subset, reduced mod 2 (zeros dropped)
std::map<Diagram, int> expand_subsets(const BypassSystem& sys, Dir dir);

bool has_pinwheel(const BypassSystem& sys, Dir dir);

}  // namespace sutura
