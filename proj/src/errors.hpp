#pragma once

#include <stdexcept>
#include <string>

namespace qhlab {

enum class ErrorKind {
    Parse,
    Semantic,
    InvalidRelation,
    TruncationNotSaturated,
    NotSplit,
    NotSubmodule,
    NotEmbedding,
    AlgebraMismatch,
    CyclicQuiver,
    InputNotQH,
    InputNotBorel,
    BQNotBorel,
    IsoWitnessInvalid,
    MNotFiltered,
    Internal,
};

class Error : public std::runtime_error {
    ErrorKind kind_;

public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

    static const char* kind_name(ErrorKind k) {
        switch (k) {
            case ErrorKind::Parse: return "ParseError";
            case ErrorKind::Semantic: return "SemanticError";
            case ErrorKind::InvalidRelation: return "InvalidRelation";
            case ErrorKind::TruncationNotSaturated: return "TruncationNotSaturated";
            case ErrorKind::NotSplit: return "NotSplit";
            case ErrorKind::NotSubmodule: return "NotSubmodule";
            case ErrorKind::NotEmbedding: return "NotEmbedding";
            case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
            case ErrorKind::CyclicQuiver: return "CyclicQuiver";
            case ErrorKind::InputNotQH: return "InputNotQH";
            case ErrorKind::InputNotBorel: return "InputNotBorel";
            case ErrorKind::BQNotBorel: return "BQNotBorel";
            case ErrorKind::IsoWitnessInvalid: return "IsoWitnessInvalid";
            case ErrorKind::MNotFiltered: return "MNotFiltered";
            case ErrorKind::Internal: return "InternalError";
        }
        return "Error";
    }
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace qhlab
