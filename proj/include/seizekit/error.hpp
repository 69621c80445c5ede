#pragma once

#include <stdexcept>
#include <string>

namespace seizekit {

// Base class for everything the pipeline can throw on bad input or state.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structural problem in an EDF file; carries the byte offset of the field
// that failed to decode.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t byte_offset)
        : Error(msg + " (byte offset " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// Data section ended early; complete_records says how many full data
// records were recovered before the truncation.
class PartialReadError : public Error {
public:
    PartialReadError(const std::string& msg, std::size_t complete_records)
        : Error(msg + " (" + std::to_string(complete_records) +
                " complete records recovered)"),
          complete_records_(complete_records) {}

    std::size_t complete_records() const { return complete_records_; }

private:
    std::size_t complete_records_;
};

}  // namespace seizekit
