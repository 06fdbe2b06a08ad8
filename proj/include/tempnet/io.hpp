#pragma once

#include <iosfwd>
#include <string>

#include "tempnet/core.hpp"

namespace tempnet {

// Contact file: "u v t" per line, '#'/'%' comments.
void write_contacts(const ContactSequence& cs, std::ostream& out);

// Partition / ground-truth file: "vertex slice label" per line.
void write_partition(const Partition& p, std::ostream& out);
Partition read_partition(std::istream& in);
Partition read_partition_file(const std::string& path);

}  // namespace tempnet
