#pragma once

#include <iosfwd>

#include "snchar/charvalues.hpp"

namespace snchar {

/// CSV layout: header row holds the class labels, the first column holds the
/// character labels, values are exact decimal integers. Partition labels are
/// quoted because the partition text format itself uses commas.
void write_table_csv(std::ostream& out, const CharTable& table);

/// Parses the format written by write_table_csv. Throws std::runtime_error
/// on malformed input.
CharTable read_table_csv(std::istream& in);

}  // namespace snchar
