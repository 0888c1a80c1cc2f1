#!/usr/bin/env python3
'''
Knowledge Graph

Indexed in-memory knowledge graph built from N-Triples input.

Copyright (C) 2026 Jason Piszcyk
Email: Jason.Piszcyk@gmail.com

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program (See file: COPYING). If not, see
<https://www.gnu.org/licenses/>.
'''
###########################################################################
#
# Imports
#
###########################################################################
from __future__ import annotations

# Shared variables, constants, etc
from appkgvec.base import AppKGVecBaseClass, open_text
from appkgvec.exceptions import NTriplesParseError

# System Modules
import re
from urllib.parse import quote, unquote
from rdflib.exceptions import ParserError
from rdflib.plugins.parsers.ntriples import W3CNTriplesParser
from rdflib.term import BNode, Literal, URIRef

# Local app modules

# Imports for python variable type hints
from typing import IO, Iterable, NamedTuple


###########################################################################
#
# Module Specific Items
#
###########################################################################
#
# Types
#
class Iri(NamedTuple):
    ''' An interned identifier and its original lexical form '''
    handle: int
    lexical: str

    def __str__(self) -> str:
        return self.lexical


class Triple(NamedTuple):
    ''' A single edge of the graph '''
    subject: Iri
    predicate: Iri
    object: Iri


#
# Constants
#
ABSOLUTE_IRI = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
BNODE_PREFIX = "_:"


#
# Global Variables
#


###########################################################################
#
# Interner Class Definition
#
###########################################################################
class Interner():
    '''
    Bijective map between lexical forms and dense integer handles.  Handles
    are assigned in first-seen order.

    Attributes:
        None
    '''
    #
    # __init__
    #
    def __init__(self):
        '''
        Initialises the instance.

        Args:
            None

        Returns:
            None

        Raises:
            None
        '''
        # Private Attributes
        self._handles: dict[str, int] = {}
        self._lexical: list[str] = []


    #
    # __len__
    #
    def __len__(self) -> int:
        return len(self._lexical)


    #
    # __contains__
    #
    def __contains__(self, lexical: object) -> bool:
        return lexical in self._handles


    #
    # intern
    #
    def intern(self, lexical: str = "") -> int:
        ''' Return the handle for a lexical form, creating it if required '''
        assert isinstance(lexical, str), "lexical form must be a string"
        assert lexical, "lexical form cannot be empty"

        _handle = self._handles.get(lexical)
        if _handle is None:
            _handle = len(self._lexical)
            self._handles[lexical] = _handle
            self._lexical.append(lexical)

        return _handle


    #
    # handle
    #
    def handle(self, lexical: str = "") -> int:
        ''' The handle of an existing lexical form (KeyError if unknown) '''
        return self._handles[lexical]


    #
    # lexical
    #
    def lexical(self, handle: int = 0) -> str:
        ''' The lexical form of a handle '''
        return self._lexical[handle]


###########################################################################
#
# KnowledgeGraph Class Definition
#
###########################################################################
class KnowledgeGraph():
    '''
    Directed labelled multigraph over interned entities and predicates.

    Entities and predicates are interned separately so a walk token is
    always unambiguously one or the other.  Duplicate triples are stored
    once.  Construction is single writer; once built the graph is only read.

    Attributes:
        num_entities (int) [ReadOnly]: |V|
        num_predicates (int) [ReadOnly]: |R|
        num_edges (int) [ReadOnly]: |E|
    '''
    #
    # __init__
    #
    def __init__(self):
        '''
        Initialises the instance.

        Args:
            None

        Returns:
            None

        Raises:
            None
        '''
        # Private Attributes
        self._entities = Interner()
        self._predicates = Interner()
        self._edges: list[tuple[int, int, int]] = []
        self._edge_set: set[tuple[int, int, int]] = set()
        self._out: list[list[tuple[int, int]]] = []
        self._in: list[list[tuple[int, int]]] = []
        self._literals: set[int] = set()


    ###########################################################################
    #
    # Properties
    #
    ###########################################################################
    @property
    def num_entities(self) -> int:
        ''' Number of entities (|V|) '''
        return len(self._entities)


    @property
    def num_predicates(self) -> int:
        ''' Number of relations (|R|) '''
        return len(self._predicates)


    @property
    def num_edges(self) -> int:
        ''' Number of edges (|E|) '''
        return len(self._edges)


    ###########################################################################
    #
    # Construction
    #
    ###########################################################################
    #
    # add_entity
    #
    def add_entity(self, lexical: str = "", literal: bool = False) -> int:
        '''
        Add an entity (no-op if it exists)

        Args:
            lexical (str): The lexical form
            literal (bool): True if the entity stands for a literal value

        Returns:
            int: The entity handle

        Raises:
            None
        '''
        _handle = self._entities.intern(lexical)
        if _handle == len(self._out):
            self._out.append([])
            self._in.append([])

        if literal: self._literals.add(_handle)

        return _handle


    #
    # add_predicate
    #
    def add_predicate(self, lexical: str = "") -> int:
        ''' Add a predicate (no-op if it exists) and return its handle '''
        return self._predicates.intern(lexical)


    #
    # add_triple
    #
    def add_triple(
            self,
            subject: str = "",
            predicate: str = "",
            object: str = ""
    ) -> bool:
        '''
        Add an edge between two entities

        Args:
            subject (str): Lexical form of the subject
            predicate (str): Lexical form of the predicate
            object (str): Lexical form of the object

        Returns:
            bool: True if the edge was added, False if it was a duplicate

        Raises:
            None
        '''
        _s = self.add_entity(subject)
        _p = self.add_predicate(predicate)
        _o = self.add_entity(object)

        return self._add_edge(_s, _p, _o)


    #
    # _add_edge
    #
    def _add_edge(self, s: int, p: int, o: int) -> bool:
        _edge = (s, p, o)
        if _edge in self._edge_set: return False

        self._edge_set.add(_edge)
        self._edges.append(_edge)
        self._out[s].append((p, o))
        self._in[o].append((s, p))

        return True


    ###########################################################################
    #
    # Lookups
    #
    ###########################################################################
    #
    # entity_handle
    #
    def entity_handle(self, v: Iri | str | int = 0) -> int:
        '''
        Resolve an entity given as an Iri, lexical form or handle

        Args:
            v (Iri | str | int): The entity

        Returns:
            int: The entity handle

        Raises:
            KeyError:
                When the entity is not in the graph
        '''
        if isinstance(v, Iri):
            _handle = v.handle
            if _handle >= len(self._entities) or \
                    self._entities.lexical(_handle) != v.lexical:
                raise KeyError(f"entity not in graph: {v.lexical}")
            return _handle

        if isinstance(v, str):
            try:
                return self._entities.handle(v)
            except KeyError:
                raise KeyError(f"entity not in graph: {v}") from None

        if isinstance(v, int) and not isinstance(v, bool):
            if 0 <= v < len(self._entities): return v

        raise KeyError(f"entity not in graph: {v!r}")


    #
    # entity
    #
    def entity(self, v: Iri | str | int = 0) -> Iri:
        ''' The Iri of an entity (KeyError if unknown) '''
        _handle = self.entity_handle(v)
        return Iri(_handle, self._entities.lexical(_handle))


    #
    # predicate
    #
    def predicate(self, p: str | int = 0) -> Iri:
        ''' The Iri of a predicate given its lexical form or handle '''
        if isinstance(p, str):
            return Iri(self._predicates.handle(p), p)

        return Iri(p, self._predicates.lexical(p))


    #
    # has_entity
    #
    def has_entity(self, lexical: str = "") -> bool:
        ''' True if the lexical form is an entity of the graph '''
        return lexical in self._entities


    #
    # entity_lexical / predicate_lexical
    #
    def entity_lexical(self, handle: int = 0) -> str:
        return self._entities.lexical(handle)


    def predicate_lexical(self, handle: int = 0) -> str:
        return self._predicates.lexical(handle)


    #
    # is_literal
    #
    def is_literal(self, handle: int = 0) -> bool:
        ''' True if the entity stands for a literal object '''
        return handle in self._literals


    #
    # entities / predicates / edges
    #
    def entities(self) -> list[Iri]:
        ''' All entities in handle order '''
        return [Iri(_h, self._entities.lexical(_h))
                for _h in range(len(self._entities))]


    def predicates(self) -> list[Iri]:
        ''' All predicates in handle order '''
        return [Iri(_h, self._predicates.lexical(_h))
                for _h in range(len(self._predicates))]


    def edges(self) -> list[Triple]:
        ''' All edges in insertion order '''
        return [
            Triple(
                Iri(_s, self._entities.lexical(_s)),
                Iri(_p, self._predicates.lexical(_p)),
                Iri(_o, self._entities.lexical(_o))
            )
            for (_s, _p, _o) in self._edges
        ]


    def edge_handles(self) -> list[tuple[int, int, int]]:
        ''' Raw (subject, predicate, object) handle triples '''
        return self._edges


    #
    # out_handles / in_handles
    #
    def out_handles(self, handle: int = 0) -> list[tuple[int, int]]:
        ''' Raw (predicate, object) handle pairs leaving an entity '''
        return self._out[handle]


    def in_handles(self, handle: int = 0) -> list[tuple[int, int]]:
        ''' Raw (subject, predicate) handle pairs entering an entity '''
        return self._in[handle]


    #
    # out_edges
    #
    def out_edges(self, v: Iri | str | int = 0) -> list[tuple[Iri, Iri]]:
        '''
        The outgoing edges of an entity in insertion order

        Args:
            v (Iri | str | int): The entity

        Returns:
            list: (predicate, object) pairs, empty for a sink

        Raises:
            KeyError:
                When the entity is not in the graph
        '''
        _handle = self.entity_handle(v)

        return [
            (self.predicate(_p), Iri(_o, self._entities.lexical(_o)))
            for (_p, _o) in self._out[_handle]
        ]


    #
    # in_edges
    #
    def in_edges(self, v: Iri | str | int = 0) -> list[tuple[Iri, Iri]]:
        '''
        The incoming edges of an entity in insertion order

        Args:
            v (Iri | str | int): The entity

        Returns:
            list: (subject, predicate) pairs, empty for a source

        Raises:
            KeyError:
                When the entity is not in the graph
        '''
        _handle = self.entity_handle(v)

        return [
            (Iri(_s, self._entities.lexical(_s)), self.predicate(_p))
            for (_s, _p) in self._in[_handle]
        ]


    #
    # edge_set
    #
    def edge_set(self) -> set[tuple[str, str, str]]:
        ''' The edges as lexical triples (for order-insensitive comparison) '''
        return {
            (
                self._entities.lexical(_s),
                self._predicates.lexical(_p),
                self._entities.lexical(_o)
            )
            for (_s, _p, _o) in self._edges
        }


    #
    # statistics
    #
    def statistics(self) -> dict[str, int]:
        ''' Size summary of the graph '''
        return {
            "entities": self.num_entities,
            "predicates": self.num_predicates,
            "edges": self.num_edges,
            "sinks": sum(1 for _o in self._out if not _o),
            "sources": sum(1 for _i in self._in if not _i),
        }


###########################################################################
#
# _TripleSink Class Definition
#
###########################################################################
class _TripleSink():
    ''' Collects the terms of the triple on the line just parsed '''
    def __init__(self):
        self.terms: list[tuple] = []

    def triple(self, s, p, o):
        self.terms.append((s, p, o))


###########################################################################
#
# NTriplesReader Class Definition
#
###########################################################################
class NTriplesReader(AppKGVecBaseClass):
    '''
    Reads N-Triples into a KnowledgeGraph.

    Each line is handed to rdflib's N-Triples parser on its own so errors
    can be reported with the line number.  Blank node labels are kept as
    the lexical form ('_:label').

    Attributes:
        skip_literals (bool) [ReadOnly]: Drop triples with literal objects
        skip_predicates (frozenset) [ReadOnly]: Predicate IRIs to drop
    '''
    #
    # __init__
    #
    def __init__(
            self,
            *args,
            skip_literals: bool = True,
            skip_predicates: Iterable[str] = (),
            **kwargs
    ):
        '''
        Initialises the instance.

        Args:
            *args (Undef): Unnamed arguments to be passed to the constructor
                of the inherited process
            skip_literals (bool): If True (default) triples with a literal
                object are skipped (their subject is still materialised)
            skip_predicates (Iterable): Predicate IRIs (eg rdf:type) whose
                triples are skipped
            **kwargs (Undef): Keyword arguments to be passed to the constructor
                of the inherited process

        Returns:
            None

        Raises:
            AssertionError:
                When skip_literals is not a bool
        '''
        assert isinstance(skip_literals, bool), "skip_literals must be a bool"

        super().__init__(*args, **kwargs)

        # Private Attributes
        self._skip_literals = skip_literals
        self._skip_predicates = frozenset(skip_predicates)

        # Attributes


    ###########################################################################
    #
    # Properties
    #
    ###########################################################################
    @property
    def skip_literals(self) -> bool:
        ''' True if literal objects are skipped '''
        return self._skip_literals


    @property
    def skip_predicates(self) -> frozenset:
        ''' Predicates whose triples are skipped '''
        return self._skip_predicates


    ###########################################################################
    #
    # Term Conversion
    #
    ###########################################################################
    #
    # _term_lexical
    #
    def _term_lexical(
            self,
            term,
            bnode_labels: dict,
            line_number: int,
            line: str
    ) -> str:
        '''
        The lexical form for an IRI or blank node term

        Args:
            term (URIRef | BNode): The rdflib term
            bnode_labels (dict): Map of BNode back to its label in the input
            line_number (int): Line being parsed (for errors)
            line (str): Text being parsed (for errors)

        Returns:
            str: The lexical form

        Raises:
            NTriplesParseError:
                When an IRI is not absolute
        '''
        if isinstance(term, BNode):
            return f"{BNODE_PREFIX}{bnode_labels.get(term, str(term))}"

        _lexical = str(term)
        if not ABSOLUTE_IRI.match(_lexical):
            raise NTriplesParseError(
                f"IRI is not absolute <{_lexical}>",
                line_number=line_number,
                text=line
            )

        return _lexical


    ###########################################################################
    #
    # Parsing
    #
    ###########################################################################
    #
    # parse
    #
    def parse(
            self,
            stream: Iterable[str] = (),
            graph: KnowledgeGraph | None = None
    ) -> KnowledgeGraph:
        '''
        Parse a line oriented N-Triples stream

        Args:
            stream (Iterable): Lines of N-Triples text
            graph (KnowledgeGraph): Graph to add to (a new graph if None)

        Returns:
            KnowledgeGraph: The graph

        Raises:
            NTriplesParseError:
                When a line is malformed or an IRI is not absolute
        '''
        _graph = graph if graph is not None else KnowledgeGraph()

        _sink = _TripleSink()
        _bnode_context: dict = {}
        _bnode_labels: dict = {}
        _parser = W3CNTriplesParser(sink=_sink)

        _added = 0
        _skipped = 0
        for _line_number, _line in enumerate(stream, start=1):
            _sink.terms.clear()

            try:
                _parser.parsestring(_line, bnode_context=_bnode_context)

            except ParserError as _err:
                raise NTriplesParseError(
                    str(_err).splitlines()[0] if str(_err) else "invalid line",
                    line_number=_line_number,
                    text=_line
                ) from None

            # Remember the input label of any new blank nodes
            if len(_bnode_labels) != len(_bnode_context):
                for _label, _bnode in _bnode_context.items():
                    _bnode_labels.setdefault(_bnode, _label)

            for (_s, _p, _o) in _sink.terms:
                _subject = self._term_lexical(
                    _s, _bnode_labels, _line_number, _line
                )
                _predicate = self._term_lexical(
                    _p, _bnode_labels, _line_number, _line
                )

                if _predicate in self._skip_predicates:
                    _skipped += 1
                    continue

                if isinstance(_o, Literal):
                    if self._skip_literals:
                        # The subject is still a vertex of the graph
                        _graph.add_entity(_subject)
                        _skipped += 1
                        continue

                    _object = quote(_o.n3(), safe="")
                    _graph.add_entity(_object, literal=True)

                else:
                    _object = self._term_lexical(
                        _o, _bnode_labels, _line_number, _line
                    )

                if _graph.add_triple(_subject, _predicate, _object):
                    _added += 1

        self._logger.debug(
            f"Parsed N-Triples: {_added} edges added, {_skipped} skipped"
        )

        return _graph


    #
    # load
    #
    def load(self, paths: Iterable[str] = ()) -> KnowledgeGraph:
        '''
        Load one or more N-Triples files (gzip if named .gz) into one graph

        Args:
            paths (Iterable): The files to read

        Returns:
            KnowledgeGraph: The graph

        Raises:
            FileNotFoundError:
                When a file does not exist
            NTriplesParseError:
                When a line is malformed
        '''
        _graph = KnowledgeGraph()

        for _path in paths:
            self._logger.info(f"Loading graph: {_path}")
            with open_text(_path) as _stream:
                self.parse(stream=_stream, graph=_graph)

        self._logger.info(f"Graph loaded: {_graph.statistics()}")

        return _graph


###########################################################################
#
# Module Functions
#
###########################################################################
#
# parse_ntriples
#
def parse_ntriples(
        stream: Iterable[str] = (),
        skip_literals: bool = True,
        skip_predicates: Iterable[str] = ()
) -> KnowledgeGraph:
    '''
    Parse N-Triples text into a KnowledgeGraph

    Args:
        stream (Iterable): Lines of N-Triples text (a str is split in lines)
        skip_literals (bool): If True (default) skip literal-object triples
        skip_predicates (Iterable): Predicate IRIs to skip

    Returns:
        KnowledgeGraph: The graph

    Raises:
        NTriplesParseError:
            When a line is malformed or an IRI is not absolute
    '''
    if isinstance(stream, str):
        stream = stream.splitlines(keepends=True)

    _reader = NTriplesReader(
        skip_literals=skip_literals,
        skip_predicates=skip_predicates
    )

    return _reader.parse(stream=stream)


#
# load_graph
#
def load_graph(
        paths: Iterable[str] = (),
        skip_literals: bool = True,
        skip_predicates: Iterable[str] = (),
        logger_name: str = "",
        logger_level: str = "CRITICAL"
) -> KnowledgeGraph:
    ''' Load N-Triples files into a single graph (see NTriplesReader.load) '''
    _reader = NTriplesReader(
        skip_literals=skip_literals,
        skip_predicates=skip_predicates,
        logger_name=logger_name,
        logger_level=logger_level
    )

    return _reader.load(paths=paths)


#
# _term_n3
#
def _term_n3(graph: KnowledgeGraph, handle: int) -> str:
    _lexical = graph.entity_lexical(handle)

    if graph.is_literal(handle): return unquote(_lexical)
    if _lexical.startswith(BNODE_PREFIX): return _lexical

    return URIRef(_lexical).n3()


#
# write_ntriples
#
def write_ntriples(graph: KnowledgeGraph | None = None, sink: IO[str] | None = None) -> int:
    '''
    Serialise the edges of a graph as N-Triples (one edge per line)

    Args:
        graph (KnowledgeGraph): The graph
        sink (IO): A text stream to write to

    Returns:
        int: The number of lines written

    Raises:
        AssertionError:
            When graph or sink are not supplied
    '''
    assert isinstance(graph, KnowledgeGraph), "a graph is required"
    assert sink is not None, "a sink is required"

    _count = 0
    for (_s, _p, _o) in graph.edge_handles():
        _predicate = URIRef(graph.predicate_lexical(_p)).n3()
        sink.write(
            f"{_term_n3(graph, _s)} {_predicate} {_term_n3(graph, _o)} .\n"
        )
        _count += 1

    return _count


###########################################################################
#
# In case this is run directly rather than imported...
#
###########################################################################
'''
Handle case of being run directly rather than imported
'''
if __name__ == "__main__":
    pass
