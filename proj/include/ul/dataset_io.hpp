#pragma once

#include <iosfwd>
#include <string>

#include "ul/bits.hpp"
#include "ul/domain.hpp"

namespace ul {

// Text dataset files: a header line declaring the class, then one item per
// line as `x_1,...,x_d ; y`. Headers:
//   class=thresholds domain=6
//   class=point domain=5
//   class=prodthresh d=2 m=3
//   class=parities d=2

ConceptClass parse_class_header(const std::string& line);
std::string class_header(const ConceptClass& cls);

struct ParsedDataset {
    ConceptClass cls;
    Dataset items;
};

ParsedDataset read_dataset(std::istream& in);
ParsedDataset read_dataset_file(const std::string& path);
void write_dataset(std::ostream& out, const ConceptClass& cls, const Dataset& S);

// Blob files: 8-byte little-endian bit count, then the packed bytes.
void write_blob_file(const std::string& path, const Blob& b);
Blob read_blob_file(const std::string& path);

}  // namespace ul
