#pragma once

#include "gk/catalog.hpp"
#include "gk/claims.hpp"
#include "gk/cyclo.hpp"
#include "gk/expr.hpp"
#include "gk/graph.hpp"
#include "gk/integer.hpp"
#include "gk/numtheory.hpp"
#include "gk/verifier.hpp"
