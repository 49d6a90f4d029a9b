#ifndef CLOSURELAB_CATALOG_HPP_
#define CLOSURELAB_CATALOG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "closurelab/actions.hpp"
#include "closurelab/field.hpp"
#include "closurelab/stabchain.hpp"

namespace closurelab {

  PermGroup symmetric(std::size_t n);
  PermGroup alternating(std::size_t n);
  PermGroup cyclic(std::size_t n);
  // Symmetries of the n-gon on n points, order 2n; needs n >= 3.
  PermGroup dihedral(std::size_t n);

  // Contents of a generator data file:
  //
  //   degree N
  //   (1 2 3)(4 5)
  //   ...
  //   checksum 0123456789abcdef     (optional)
  //
  // Blank lines and lines starting with '#' are ignored. The checksum is the
  // 64-bit FNV-1a hash of the generator lines joined by '\n'.
  struct GeneratorData {
    std::size_t              degree = 0;
    std::vector<Permutation> generators;
  };

  GeneratorData parse_generator_data(std::string_view text);
  GeneratorData read_generator_file(std::filesystem::path const& path);
  std::string   format_generator_data(GeneratorData const& data);

  // Directory holding the shipped generator files: $CLOSURELAB_DATA_DIR if
  // set, otherwise the install-time default.
  std::filesystem::path data_dir();

  // M11, M12, M22, M23 or M24 in the natural action, read from the data
  // directory. The order and the exact transitivity degree are validated;
  // a failed check raises Error naming it.
  ActionInstance mathieu(std::string_view name);

  // |PSL(n, q)| = q^(n(n-1)/2) prod_{i=2..n} (q^i - 1) / gcd(n, q - 1)
  Integer psl_order(std::size_t n, std::uint32_t q);

  std::vector<std::uint32_t> psl_supported_fields();

  // Image of SL(n, q) on the points of PG(n-1, q), generated by a
  // transvection, a diagonal matrix and a signed cyclic monomial matrix.
  // The order is validated against psl_order.
  ActionInstance psl_projective(std::size_t n, std::uint32_t q);

  // The points <e_1>, ..., <e_n>, followed by <e_1 + ... + e_n> when q > 2.
  std::vector<Point> psl_frame_base(std::size_t n, std::uint32_t q);

  // Catalog names: Sn, An, Cn, Dn (dihedral on n points), M11..M24,
  // PSL(n,q) (also written PSLn_q).
  ActionInstance catalog_action(std::string_view name);

  std::vector<std::string> catalog_listing();

}  // namespace closurelab

#endif  // CLOSURELAB_CATALOG_HPP_
