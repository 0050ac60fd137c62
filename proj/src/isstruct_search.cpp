#include "constelloid/isstruct.hpp"
#include "constelloid/iso.hpp"
#include "constelloid/search.hpp"

namespace constelloid {

ExtensionMatch find_matching_extension(const StructureDef& cat,
                                       const IdSet& insertions, int n_max) {
  StructureDef target = cat;
  target.kind = Kind::kCategory;
  target.order.reset();
  target.surjections.reset();
  target.insertions = insertions;

  ExtensionMatch out;
  for (int n = 0; n <= n_max; ++n) {
    bool found = false;
    enumerate_constellations(
        n,
        [&](const CensusRecord& record) {
          const StructureDef q = constellation_reduct(record.canonical);
          const CanonicalExtension ext = canonical_extension(q);
          if (ext.category.size() != target.size()) {
            return true;
          }
          StructureDef candidate = ext.category;
          candidate.insertions = insertion_part(ext);
          if (are_isomorphic(candidate, target).isomorphic) {
            out.constellation = q;
            found = true;
            return false;
          }
          return true;
        },
        n_max);
    out.max_size_searched = n;
    if (found) {
      break;
    }
  }
  return out;
}

}  // namespace constelloid
