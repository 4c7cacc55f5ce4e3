#ifndef LENSTOR_LENSTOR_HPP
#define LENSTOR_LENSTOR_HPP

/* Umbrella header: exact computer algebra for lens space surgeries along the
 * two-component link families A_{m,n} and B_{p,q}. */

#include "lenstor/bilaurent.hpp"
#include "lenstor/cutseq.hpp"
#include "lenstor/decider.hpp"
#include "lenstor/homology.hpp"
#include "lenstor/laurent.hpp"
#include "lenstor/linkalg.hpp"
#include "lenstor/qpoly.hpp"
#include "lenstor/rational.hpp"
#include "lenstor/report.hpp"
#include "lenstor/residue.hpp"
#include "lenstor/selfcheck.hpp"
#include "lenstor/sympoly.hpp"
#include "lenstor/textio.hpp"
#include "lenstor/torsion.hpp"

#endif
