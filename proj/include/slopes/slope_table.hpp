#pragma once

#include "slopes/geometry.hpp"
#include "slopes/rotation_table.hpp"

#include <map>
#include <vector>

namespace slopes {

// Symbolic slope: a base direction plus a rotation-table step. Registration
// canonicalizes by resolved undirected direction, so two ids are equal exactly
// when their resolved directions are equal.
struct SlopeId {
    int base = -1;
    int rot = 0;
    bool operator==(const SlopeId& o) const { return base == o.base && rot == o.rot; }
    bool operator<(const SlopeId& o) const {
        if (base != o.base) return base < o.base;
        return rot < o.rot;
    }
};

class SlopeTable {
public:
    // Registers (or finds) the slope of direction v rotated by table step rot.
    SlopeId intern(const Vec& v, int rot = 0) {
        Vec resolved = rot == 0 ? v : RotationTable::instance().rotate(rot, v);
        Dir key = canonical_dir(resolved);
        auto it = by_dir_.find(key);
        if (it != by_dir_.end()) return it->second;
        int base_idx;
        Dir base_key = canonical_dir(v);
        auto bit = base_index_.find(base_key);
        if (bit != base_index_.end()) {
            base_idx = bit->second;
        } else {
            base_idx = static_cast<int>(bases_.size());
            bases_.push_back(base_key);
            base_index_.emplace(base_key, base_idx);
        }
        SlopeId id{base_idx, rot};
        by_dir_.emplace(key, id);
        dirs_.emplace(id, key);
        return id;
    }

    SlopeId intern_point_pair(const Point& p, const Point& q) { return intern(q - p); }

    const Dir& resolve(const SlopeId& id) const {
        auto it = dirs_.find(id);
        if (it == dirs_.end()) throw error("unknown SlopeId");
        return it->second;
    }

    size_t size() const { return by_dir_.size(); }

private:
    std::map<Dir, SlopeId> by_dir_;
    std::map<SlopeId, Dir> dirs_;
    std::vector<Dir> bases_;
    std::map<Dir, int> base_index_;
};

} // namespace slopes
