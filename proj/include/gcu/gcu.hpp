#pragma once

#include "auxgraph.hpp"
#include "closure.hpp"
#include "completion.hpp"
#include "decide.hpp"
#include "errors.hpp"
#include "gtes.hpp"
#include "oracle.hpp"
#include "problem.hpp"
#include "signature.hpp"
#include "term.hpp"
