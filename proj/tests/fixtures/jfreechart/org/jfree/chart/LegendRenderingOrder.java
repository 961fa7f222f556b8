/* ===========================================================
 * JFreeChart : a free chart library for the Java(tm) platform
 * ===========================================================
 *
 * (C) Copyright 2000-2007, by Object Refinery Limited and Contributors.
 *
 * Project Info:  http://www.jfree.org/jfreechart/index.html
 *
 * This library is free software; you can redistribute it and/or modify it
 * under the terms of the GNU Lesser General Public License as published by
 * the Free Software Foundation; either version 2.1 of the License, or
 * (at your option) any later version.
 *
 * This library is distributed in the hope that it will be useful, but
 * WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY
 * or FITNESS FOR A PARTICULAR PURPOSE. See the GNU Lesser General Public
 * License for more details.
 *
 * -------------------------
 * LegendRenderingOrder.java
 * -------------------------
 * (C) Copyright 2004-2007, by Object Refinery Limited.
 *
 * Original Author:  David Gilbert (for Object Refinery Limited);
 *
 */

package org.jfree.chart;

import java.io.Serializable;

/**
 * Represents the order for rendering legend items.
 */
public final class LegendRenderingOrder implements Serializable {

    /** In order. */
    public static final LegendRenderingOrder STANDARD
            = new LegendRenderingOrder();

    /** In reverse order. */
    public static final LegendRenderingOrder REVERSE
            = new LegendRenderingOrder();

    /**
     * Private constructor, used to prevent the instantiation of this
     * class from outside its own definition.
     */
    private LegendRenderingOrder() {
    }

    /**
     * Returns a string representing the object, for debugging
     * purposes.
     *
     * @return The string.
     */
    public String toString() {
        if (this == LegendRenderingOrder.STANDARD) {
            return "LegendRenderingOrder.STANDARD";
        }
        return "LegendRenderingOrder.REVERSE";
    }

}
