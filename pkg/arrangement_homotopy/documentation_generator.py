"""
Documentation generator: Hasse diagrams of intersection lattices.
"""
import json
import logging
import shutil
from pathlib import Path
from typing import Dict, List, Union

import graphviz

from .arrangement import normalize
from .arrangement_file import load_arrangement
from .lattice import IntersectionLattice, build_lattice

logger = logging.getLogger(__name__)


def lattice_diagram(lattice: IntersectionLattice, name: str = "lattice") -> graphviz.Digraph:
    """
    Hasse diagram with the bottom C^l at the bottom of the picture.

    Nodes carry the element label with its rank and codimension; edges are
    the covering relations.
    """
    dot = graphviz.Digraph(name=name, comment=lattice.arrangement.description or name)
    dot.attr(rankdir="BT")
    dot.attr("node", shape="box", style="rounded,filled", fillcolor="lightblue")
    for element in range(len(lattice)):
        dot.node(f"e{element}",
                 f"{lattice.label(element)}\nrank {lattice.rank(element)}, codim {lattice.codim(element)}")
    for lower, upper in lattice.covers():
        dot.edge(f"e{lower}", f"e{upper}")
    return dot


class DocumentationGenerator:
    """
    Renders lattice diagrams for arrangement files.
    """

    def __init__(self, output_dir: Union[str, Path] = "docs/assets"):
        """
        Args:
            output_dir (str): directory for .gv sources, SVGs and the manifest
        """
        self.output_dir = Path(output_dir)
        self.output_dir.mkdir(parents=True, exist_ok=True)
        self.can_render = shutil.which("dot") is not None
        if not self.can_render:
            logger.warning("Graphviz 'dot' executable not found; only .gv sources will be written")

    def diagram_for_file(self, path: Union[str, Path]) -> List[str]:
        """Write the diagram of one arrangement file; returns the written paths."""
        path = Path(path)
        normalized, _ = normalize(load_arrangement(path))
        dot = lattice_diagram(build_lattice(normalized), path.stem)
        source = self.output_dir / f"{path.stem}.gv"
        source.write_text(dot.source, encoding="utf-8")
        written = [str(source)]
        if self.can_render:
            try:
                rendered = dot.render(str(self.output_dir / path.stem), format="svg", cleanup=True)
                written.append(rendered)
            except graphviz.backend.ExecutableNotFound as e:
                logger.warning(f"Could not render {path.name}: {e}")
        logger.info(f"Generated lattice diagram for {path.name}")
        return written

    def generate_corpus_diagrams(self, corpus_dir: Union[str, Path]) -> Dict[str, List[str]]:
        """
        Diagram every *.json arrangement in a directory and write asset_manifest.json.

        Files that fail to load are logged and skipped.
        """
        manifest: Dict[str, List[str]] = {}
        for path in sorted(Path(corpus_dir).glob("*.json")):
            try:
                manifest[path.stem] = self.diagram_for_file(path)
            except ValueError as e:
                logger.error(f"Skipping {path.name}: {e}")
        with open(self.output_dir / "asset_manifest.json", "w", encoding="utf-8") as f:
            json.dump({"diagrams": manifest}, f, indent=2, sort_keys=True)
        return manifest


def generate_corpus_diagrams(corpus_dir: Union[str, Path], output_dir: Union[str, Path]) -> Dict[str, List[str]]:
    return DocumentationGenerator(output_dir).generate_corpus_diagrams(corpus_dir)
