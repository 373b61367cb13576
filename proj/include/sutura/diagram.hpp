#pragma once

#include <ostream>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sutura {

// Non-crossing perfect matching on points 0..2N-1, clockwise, base point 0.
class Diagram {
public:
    Diagram();  // the vacuum, one chord (0,1)

    static Diagram from_pairs(const std::vector<std::pair<int, int>>& pairs);
    static Diagram from_mates(std::vector<int> mates);
    static Diagram parse(std::string_view text);

    int chords() const { return static_cast<int>(mate_.size()) / 2; }
    int points() const { return static_cast<int>(mate_.size()); }
    int mate(int p) const { return mate_[static_cast<std::size_t>(wrap(p))]; }
    const std::vector<int>& mates() const { return mate_; }
    int wrap(int p) const {
        int n = points();
        return ((p % n) + n) % n;
    }

    // chords in canonical order: ascending smaller endpoint
    std::vector<std::pair<int, int>> pairs() const;
    int chord_of(int p) const { return cid_[static_cast<std::size_t>(wrap(p))]; }
    std::pair<int, int> chord(int id) const;

    std::string str() const;

    friend bool operator==(const Diagram& a, const Diagram& b) { return a.mate_ == b.mate_; }
    friend auto operator<=>(const Diagram& a, const Diagram& b) {
        if (a.mate_.size() != b.mate_.size()) return a.mate_.size() <=> b.mate_.size();
        return a.mate_ <=> b.mate_;
    }

private:
    explicit Diagram(std::vector<int> mates, bool);
    void index_chords();

    std::vector<int> mate_;
    std::vector<int> cid_;
};

struct Zero {
    friend bool operator==(Zero, Zero) { return true; }
};

using DiagramOrZero = std::variant<Diagram, Zero>;

inline bool is_zero(const DiagramOrZero& d) { return std::holds_alternative<Zero>(d); }
inline const Diagram& diagram_of(const DiagramOrZero& d) { return std::get<Diagram>(d); }
std::string to_string(const DiagramOrZero& d);

struct Region {
    int id = 0;
    int sign = 0;
    std::vector<int> arcs;    // boundary arc k runs from point k to k+1
    std::vector<int> chords;  // canonical chord ids
};

std::vector<Region> regions(const Diagram& g);
// region id of every boundary arc, ids as in regions()
std::vector<int> region_of_arcs(const Diagram& g);
int euler_class(const Diagram& g);
inline int arc_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

std::vector<Diagram> enumerate_diagrams(int n);
std::vector<Diagram> enumerate_diagrams(int n, int e);

Diagram rotate_points(const Diagram& g, int steps);

// cap off points p, p+1 (joining the chords there); Zero if they were one chord
DiagramOrZero annihilate_at(const Diagram& g, int p);
// inverse: new outermost chord on points (p, p+1) of the enlarged diagram
Diagram create_at(const Diagram& g, int p);
// big labels -> small labels after deleting the adjacent pair (p,p+1); -1 for the pair itself
std::vector<int> survivor_map(int big_points, int p);

Diagram merge(const std::optional<Diagram>& left, const std::optional<Diagram>& right);
std::pair<std::optional<Diagram>, std::optional<Diagram>> unique_split(const Diagram& g);

inline std::ostream& operator<<(std::ostream& os, const Diagram& d) { return os << d.str(); }
inline std::ostream& operator<<(std::ostream& os, const DiagramOrZero& d) { return os << to_string(d); }

}  // namespace sutura

template <>
struct std::hash<sutura::Diagram> {
    std::size_t operator()(const sutura::Diagram& d) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int m : d.mates()) h = (h ^ static_cast<std::size_t>(m + 1)) * 1099511628211ull;
        return h;
    }
};
