#ifndef HHCI_HHCI_HPP
#define HHCI_HHCI_HPP

#include <hhci/core/a_element.hpp>
#include <hhci/core/index_set.hpp>
#include <hhci/core/monomial.hpp>
#include <hhci/core/scalar.hpp>

#include <hhci/chain_map.hpp>
#include <hhci/cochain.hpp>
#include <hhci/cohomology_ring.hpp>
#include <hhci/hilbert.hpp>
#include <hhci/laurent.hpp>
#include <hhci/linalg.hpp>
#include <hhci/parse.hpp>
#include <hhci/report.hpp>
#include <hhci/resolution.hpp>
#include <hhci/verify.hpp>

#endif
