#pragma once

#include <stdexcept>
#include <string>

namespace qnlp {

#define QNLP_DEFINE_ERROR(Name)                                    \
  struct Name : std::runtime_error {                               \
    explicit Name(const std::string& msg)                          \
        : std::runtime_error(std::string(#Name) + ": " + msg) {}   \
  }

// textprep
QNLP_DEFINE_ERROR(OverlappingRules);
QNLP_DEFINE_ERROR(EmptySentence);

// pregroup
QNLP_DEFINE_ERROR(InvalidInput);

// qsim
QNLP_DEFINE_ERROR(UnregisteredTypeAtom);
QNLP_DEFINE_ERROR(ZeroNorm);
QNLP_DEFINE_ERROR(BlochOutOfBall);
QNLP_DEFINE_ERROR(NonFiniteGradient);

// baseline classifier
QNLP_DEFINE_ERROR(NoValidChunks);
QNLP_DEFINE_ERROR(InsufficientChunks);
QNLP_DEFINE_ERROR(DegenerateSplit);

// sequence model
QNLP_DEFINE_ERROR(AllMasked);

// explanation metrics
QNLP_DEFINE_ERROR(NonEquivalentPair);

// harness
QNLP_DEFINE_ERROR(ParseError);
QNLP_DEFINE_ERROR(EmptyCorpus);
QNLP_DEFINE_ERROR(TooFewPerClass);
QNLP_DEFINE_ERROR(StageError);

#undef QNLP_DEFINE_ERROR

}  // namespace qnlp
