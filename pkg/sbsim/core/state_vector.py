"""Flat state arrays with a named slot layout."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import collections
import numpy

Slot = collections.namedtuple('Slot', ['name', 'size', 'units'])


class StateLayout(object):
    """
    Ordered description of the slots packed in a state array.

    Attributes
    ----------
    slots : list of Slot
        Slots in packing order.

    """

    def __init__(self, slots):
        self.slots = [Slot(*slot) for slot in slots]
        self._offsets = {}
        offset = 0
        for slot in self.slots:
            self._offsets[slot.name] = slice(offset, offset + slot.size)
            offset += slot.size
        self.size = offset

    def __len__(self):
        return self.size

    def __getitem__(self, name):
        return self._offsets[name]

    def slot_name(self, index):
        """Return the name of the scalar at flat position `index`."""
        for slot in self.slots:
            part = self._offsets[slot.name]
            if part.start <= index < part.stop:
                if slot.size == 1:
                    return slot.name
                return '{}[{}]'.format(slot.name, index - part.start)
        raise IndexError(index)

    def pack(self, values):
        """Pack a dict of slot values into a flat array."""
        result = numpy.zeros(self.size)
        for slot in self.slots:
            part = numpy.asarray(values[slot.name], dtype=float).reshape(-1)
            if part.size != slot.size:
                raise ValueError('Slot {} expects {} values, got {}.'
                                 .format(slot.name, slot.size, part.size))
            result[self._offsets[slot.name]] = part
        return result

    def unpack(self, array):
        """Split a flat array into a dict of slot values."""
        array = numpy.asarray(array, dtype=float)
        if array.size != self.size:
            raise ValueError('Layout expects {} values, got {}.'
                             .format(self.size, array.size))
        return {slot.name: array[self._offsets[slot.name]].copy()
                for slot in self.slots}


class StateVector(object):
    """
    Flat array of scalars and the layout naming them.

    Attributes
    ----------
    values : numpy.ndarray
        Packed state.
    layout : StateLayout
        Slot descriptor, same length as `values`.

    """

    __slots__ = ('values', 'layout')

    def __init__(self, values, layout):
        values = numpy.array(values, dtype=float).reshape(-1)
        if values.size != len(layout):
            raise ValueError('Layout length {} does not match state length '
                             '{}.'.format(len(layout), values.size))
        self.values = values
        self.layout = layout

    @classmethod
    def pack(cls, layout, **slots):
        return cls(layout.pack(slots), layout)

    def unpack(self):
        return self.layout.unpack(self.values)

    def __getitem__(self, name):
        return self.values[self.layout[name]]

    def replace(self, values):
        """Return a new state with the same layout and new values."""
        return StateVector(values, self.layout)
