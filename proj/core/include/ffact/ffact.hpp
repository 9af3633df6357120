#ifndef FFACT_FFACT_HPP_
#define FFACT_FFACT_HPP_

#include "ffact/compaction.hpp"
#include "ffact/det_splits.hpp"
#include "ffact/error.hpp"
#include "ffact/forest.hpp"
#include "ffact/io.hpp"
#include "ffact/labelling.hpp"
#include "ffact/oracle.hpp"
#include "ffact/rexp.hpp"
#include "ffact/semigroup.hpp"
#include "ffact/splits.hpp"

#endif  // FFACT_FFACT_HPP_
