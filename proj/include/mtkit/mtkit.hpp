#pragma once

#include "mtkit/bits.hpp"
#include "mtkit/compactness.hpp"
#include "mtkit/constructions.hpp"
#include "mtkit/corpus.hpp"
#include "mtkit/embedding.hpp"
#include "mtkit/error.hpp"
#include "mtkit/frame.hpp"
#include "mtkit/funayama.hpp"
#include "mtkit/io.hpp"
#include "mtkit/isomorphism.hpp"
#include "mtkit/lattice.hpp"
#include "mtkit/mt_algebra.hpp"
#include "mtkit/poset.hpp"
#include "mtkit/product.hpp"
#include "mtkit/profile.hpp"
#include "mtkit/raney.hpp"
#include "mtkit/separation.hpp"
#include "mtkit/theorems.hpp"
