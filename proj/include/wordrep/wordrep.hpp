#pragma once

#include "wordrep/canonical.hpp"
#include "wordrep/catalog.hpp"
#include "wordrep/census.hpp"
#include "wordrep/decision.hpp"
#include "wordrep/error.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/graph_io.hpp"
#include "wordrep/naive.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/parallel.hpp"
#include "wordrep/search.hpp"
#include "wordrep/word.hpp"
#include "wordrep/word_search.hpp"
